"""
Ladders and e-regularisation.

Ladder l is the set of nodes (i, j) with i + (e-1)(j-1) = l. Regularising
slides every node of a ladder to the highest free position of that ladder.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List

from app.partitions.errors import InvariantError
from app.partitions.partition import Node, Partition, from_nodes, nodes, require_e, size


@dataclass(frozen=True)
class LadderCounts:
    """Number of nodes of a partition in each ladder; empty ladders are omitted"""
    e: int
    counts: Dict[int, int] = field(default_factory=dict)

    def __getitem__(self, ladder: int) -> int:
        return self.counts.get(ladder, 0)

    def total(self) -> int:
        return sum(self.counts.values())


def ladder_index(node: Node, e: int) -> int:
    require_e(e)
    row, col = node
    return row + (e - 1) * (col - 1)


def ladder_capacity(ladder: int, e: int) -> int:
    """Number of nodes of ladder l with row >= 1 and col >= 1"""
    require_e(e)
    return (ladder - 1) // (e - 1) + 1


def ladder_top_row(ladder: int, e: int) -> int:
    require_e(e)
    return ladder - (e - 1) * ((ladder - 1) // (e - 1))


def ladder_nodes(ladder: int, e: int) -> List[Node]:
    """Nodes of ladder l ordered from the top row down"""
    capacity = ladder_capacity(ladder, e)
    top = ladder_top_row(ladder, e)
    return [Node(top + (e - 1) * k, capacity - k) for k in range(capacity)]


def ladder_counts(la: Partition, e: int) -> LadderCounts:
    require_e(e)
    counts: Dict[int, int] = {}
    for node in nodes(la):
        ladder = ladder_index(node, e)
        counts[ladder] = counts.get(ladder, 0) + 1
    return LadderCounts(e=e, counts=dict(sorted(counts.items())))


def regularise(la: Partition, e: int) -> Partition:
    """Gλ: every ladder's nodes moved as high as they will go"""
    counts = ladder_counts(la, e)
    cells = []
    for ladder, count in counts.counts.items():
        if count > ladder_capacity(ladder, e):
            raise InvariantError(f"ladder {ladder} holds {count} nodes, more than it has")
        cells.extend(ladder_nodes(ladder, e)[:count])
    result = from_nodes(cells)
    if size(result) != size(la):
        raise InvariantError(f"regularisation of {la} changed its size")
    return result
