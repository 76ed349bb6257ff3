import pytest
from hypothesis import given

from app.partitions import (
    EMPTY,
    Node,
    Partition,
    conjugate,
    is_e_regular,
    ladder_capacity,
    ladder_counts,
    ladder_index,
    ladder_nodes,
    ladder_top_row,
    parse_partition,
    regularise,
    size,
)
from tests.strategies import e_values, partitions


def test_ladder_index():
    assert ladder_index(Node(1, 1), 3) == 1
    assert ladder_index(Node(2, 3), 3) == 6


def test_ladder_geometry():
    assert ladder_capacity(5, 3) == 3
    assert ladder_top_row(5, 3) == 1
    assert ladder_top_row(6, 3) == 2
    assert ladder_nodes(5, 3) == [Node(1, 3), Node(3, 2), Node(5, 1)]


def test_ladder_counts():
    counts = ladder_counts(parse_partition("4,3^3,1^5"), 3)
    assert counts.counts == {1: 1, 2: 1, 3: 2, 4: 2, 5: 3, 6: 3, 7: 3, 8: 2, 9: 1}
    assert counts[20] == 0
    assert counts.total() == 18


@pytest.mark.parametrize(
    "text, e, expected",
    [
        ("4,3^3,1^5", 3, "5,4,3^2,2,1"),
        ("1^2", 2, "2"),
        ("1^3", 3, "2,1"),
        ("3,1", 2, "3,1"),
        ("()", 4, "()"),
    ],
)
def test_regularise(text, e, expected):
    assert regularise(parse_partition(text), e) == parse_partition(expected)


@given(partitions, e_values)
def test_regularisation_laws(la, e):
    g = regularise(la, e)
    assert size(g) == size(la)
    assert is_e_regular(g, e)
    assert regularise(g, e) == g
    assert ladder_counts(g, e) == ladder_counts(la, e)


@given(partitions, e_values)
def test_regular_partitions_are_fixed(la, e):
    if is_e_regular(la, e):
        assert regularise(la, e) == la


@given(partitions)
def test_two_regularisation_ignores_conjugation(la):
    assert regularise(la, 2) == regularise(conjugate(la), 2)


def test_regularise_empty():
    assert regularise(EMPTY, 2) == Partition(())
