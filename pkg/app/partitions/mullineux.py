"""
e-rims, the I and J operators and the Mullineux map.

M is built with Xu's recursion: strip the truncated e-rim (J) layer by
layer, record how many nodes each layer removed, then rebuild by adding
those columns in reverse. Mullineux's own characterisation (rim length,
part count and Iμ = MIλ) is kept as a separate consistency check.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

from app.partitions.errors import InvariantError, PreconditionError
from app.partitions.partition import (
    EMPTY,
    Node,
    Partition,
    add_column,
    format_partition,
    is_e_regular,
    num_parts,
    part_at,
    remove_nodes,
    size,
)


@dataclass(frozen=True)
class RimData:
    """
    The e-rim of a partition with the scalars derived from it.

    r is the e-rim length, m the number of parts Mullineux assigns to the
    image, l_prime the length of the column J puts back.
    """
    e: int
    rim_nodes: Tuple[Node, ...]
    truncated_rim: FrozenSet[Node]
    m: int
    l_prime: int

    @property
    def r(self) -> int:
        return len(self.rim_nodes)


def _require_regular(la: Partition, e: int) -> None:
    if not is_e_regular(la, e):
        raise PreconditionError(
            "e-regular", f"{format_partition(la)} is {e}-singular"
        )


def e_rim(la: Partition, e: int) -> RimData:
    _require_regular(la, e)
    if not la:
        return RimData(e=e, rim_nodes=(), truncated_rim=frozenset(), m=0, l_prime=0)

    last = num_parts(la)
    walk = [Node(1, la.parts[0])]
    limit = size(la) + last
    k = 1
    while True:
        row, col = walk[-1]
        if row == last and (col == 1 or k % e == 0):
            break
        if k >= limit:
            raise InvariantError(
                f"{e}-rim walk on {format_partition(la)} did not stop after {limit} steps"
            )
        k += 1
        if (k - 1) % e == 0:
            walk.append(Node(row + 1, part_at(la, row + 1)))
        elif part_at(la, row + 1) >= col:
            walk.append(Node(row + 1, col))
        else:
            walk.append(Node(row, col - 1))
        if walk[-1].col < 1:
            raise InvariantError(f"{e}-rim walk on {format_partition(la)} left the diagram")

    r = len(walk)
    on_rim = set(walk)
    truncated = {node for node in walk if Node(node.row, node.col - 1) in on_rim}
    if r % e == 0:
        m, l_prime = r - last, last
    else:
        m, l_prime = r - last + 1, last - 1
        truncated.add(Node(last, 1))
    return RimData(
        e=e,
        rim_nodes=tuple(walk),
        truncated_rim=frozenset(truncated),
        m=m,
        l_prime=l_prime,
    )


def strip_I(la: Partition, e: int) -> Partition:
    """Iλ: remove the e-rim"""
    return remove_nodes(la, e_rim(la, e).rim_nodes)


def strip_J(la: Partition, e: int) -> Partition:
    """Jλ: remove the e-rim, then add back a column of length l'"""
    data = e_rim(la, e)
    if not la:
        return EMPTY
    return add_column(remove_nodes(la, data.rim_nodes), data.l_prime)


def strip_truncated_rim(la: Partition, e: int) -> Partition:
    return remove_nodes(la, e_rim(la, e).truncated_rim)


def mullineux_layers(la: Partition, e: int) -> List[int]:
    """Sizes |μ| - |Jμ| for μ = λ, Jλ, J²λ, ... until ∅"""
    _require_regular(la, e)
    layers = []
    current = la
    while current:
        reduced = strip_J(current, e)
        removed = size(current) - size(reduced)
        if removed <= 0:
            raise InvariantError(f"J did not shrink {format_partition(current)} at e={e}")
        layers.append(removed)
        current = reduced
    return layers


def mullineux(la: Partition, e: int) -> Partition:
    result = EMPTY
    for column in reversed(mullineux_layers(la, e)):
        try:
            result = add_column(result, column)
        except PreconditionError as exc:
            raise InvariantError(
                f"Mullineux rebuild of {format_partition(la)} at e={e} failed: {exc}"
            ) from exc
    return result


def mullineux_characterization_check(la: Partition, e: int) -> bool:
    """
    Mullineux's definition applied to μ = Mλ: same e-rim length as λ,
    l(μ) = m(λ), and Iμ = MIλ.
    """
    if not la:
        raise PreconditionError("non-empty partition", "the characterisation needs λ ≠ ∅")
    mu = mullineux(la, e)
    source = e_rim(la, e)
    image = e_rim(mu, e)
    return (
        image.r == source.r
        and num_parts(mu) == source.m
        and strip_I(mu, e) == mullineux(strip_I(la, e), e)
    )
