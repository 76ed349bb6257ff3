"""
Partition value type, text notation and the elementary operators.

Rows and columns are 1-indexed everywhere a Node crosses the API boundary;
a Partition stores only its non-zero parts, and part_at() supplies the
trailing zeros of the infinite-sequence view.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from typing import Iterable, Iterator, List, NamedTuple, Optional, Tuple

from app.partitions.errors import InvariantError, PartitionParseError, PreconditionError

EMPTY_TOKEN = "()"

_PART_RE = re.compile(r"^\s*([0-9]+)\s*(?:\^\s*([0-9]+)\s*)?$", re.ASCII)


class Node(NamedTuple):
    """A cell (row, col) of a Young diagram"""
    row: int
    col: int


@dataclass(frozen=True)
class Partition:
    """
    Weakly decreasing tuple of positive integers.

    Equality and hashing use the stored parts, which are canonical because
    zeros are never stored.
    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for index, part in enumerate(parts):
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise PreconditionError(
                    "positive parts",
                    f"part {index + 1} of {parts} is not a positive integer",
                )
            if index and parts[index - 1] < part:
                raise PreconditionError(
                    "weakly decreasing parts",
                    f"{parts} increases at position {index + 1}",
                )

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return format_partition(self)

    def to_json(self) -> List[int]:
        return list(self.parts)


EMPTY = Partition()


def require_e(e: int) -> None:
    if not isinstance(e, int) or isinstance(e, bool) or e < 2:
        raise PreconditionError("e >= 2", f"e = {e!r} is not an integer at least 2")


def size(la: Partition) -> int:
    return sum(la.parts)


def num_parts(la: Partition) -> int:
    return len(la.parts)


def part_at(la: Partition, i: int) -> int:
    """λ_i with the convention that λ_i = 0 for i > l(λ)"""
    if i < 1:
        raise PreconditionError("i >= 1", f"row index {i} is not positive")
    return la.parts[i - 1] if i <= len(la.parts) else 0


def conjugate(la: Partition) -> Partition:
    if not la:
        return EMPTY
    return Partition(tuple(
        sum(1 for part in la.parts if part >= i) for i in range(1, la.parts[0] + 1)
    ))


def remove_first_row(la: Partition) -> Partition:
    return Partition(la.parts[1:])


def remove_first_column(la: Partition) -> Partition:
    return Partition(tuple(part - 1 for part in la.parts if part > 1))


def add_column(la: Partition, x: int) -> Partition:
    """Prepend a column of length x; needs x >= l(λ)"""
    if x < len(la.parts):
        raise PreconditionError(
            "x >= num_parts",
            f"cannot add a column of length {x} to {format_partition(la)} with {len(la.parts)} parts",
        )
    return Partition(tuple(part_at(la, i) + 1 for i in range(1, x + 1)))


def is_e_regular(la: Partition, e: int) -> bool:
    require_e(e)
    parts = la.parts
    return all(parts[i] != parts[i + e - 1] for i in range(len(parts) - e + 1))


def is_e_restricted(la: Partition, e: int) -> bool:
    require_e(e)
    return all(part_at(la, i) - part_at(la, i + 1) < e for i in range(1, len(la.parts) + 1))


def nodes(la: Partition) -> Iterator[Node]:
    for row, part in enumerate(la.parts, start=1):
        for col in range(1, part + 1):
            yield Node(row, col)


def from_nodes(cells: Iterable[Node]) -> Partition:
    """
    Rebuild a partition from a set of nodes.

    Raises InvariantError when the set is not a Young diagram.
    """
    cells = set(cells)
    rows = {}
    for row, col in cells:
        rows[row] = rows.get(row, 0) + 1
    length = max(rows, default=0)
    parts = tuple(rows.get(row, 0) for row in range(1, length + 1))
    for row, part in enumerate(parts, start=1):
        if part == 0 or any(Node(row, col) not in cells for col in range(1, part + 1)):
            raise InvariantError(f"row {row} of the node set is not left-justified")
    try:
        return Partition(parts)
    except PreconditionError as exc:
        raise InvariantError(f"node set is not a Young diagram: {exc}") from exc


def remove_nodes(la: Partition, cells: Iterable[Node]) -> Partition:
    cells = set(cells)
    missing = [cell for cell in cells if cell.col > part_at(la, cell.row)]
    if missing:
        raise InvariantError(f"nodes {sorted(missing)} are not in {format_partition(la)}")
    return from_nodes(cell for cell in nodes(la) if cell not in cells)


def rim(la: Partition) -> List[Node]:
    """Rim nodes ordered from (1, λ_1) down to (l(λ), 1)"""
    if not la:
        return []
    row, col = 1, la.parts[0]
    path = [Node(row, col)]
    last = len(la.parts)
    while (row, col) != (last, 1):
        if part_at(la, row + 1) >= col:
            row += 1
        else:
            col -= 1
        path.append(Node(row, col))
    return path


def _descending(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Every partition of n once, in descending lexicographic order"""
    if n < 0:
        raise PreconditionError("n >= 0", f"cannot enumerate partitions of {n}")
    return (Partition(parts) for parts in _descending(n, n))


def partitions_up_to(n_max: int) -> Iterator[Partition]:
    for n in range(n_max + 1):
        yield from enumerate_partitions(n)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) through Euler's pentagonal number recurrence"""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        first = n - k * (3 * k - 1) // 2
        if first < 0:
            break
        sign = 1 if k % 2 else -1
        total += sign * (partition_count(first) + partition_count(first - k))
        k += 1
    return total


def parse_partition(text: str, max_size: Optional[int] = None) -> Partition:
    """
    Parse exponent notation such as "10,6^2,4,2".

    The empty partition is written "()". Whitespace around tokens is ignored.
    With max_size set, text describing a larger partition is rejected before
    any parts are expanded.
    """
    if text is None:
        raise PartitionParseError("no partition text given")
    if text.strip() == EMPTY_TOKEN:
        return EMPTY
    parts: List[int] = []
    total = 0
    for piece in text.split(","):
        match = _PART_RE.match(piece)
        if not match:
            raise PartitionParseError(f"malformed part {piece.strip()!r} in {text!r}")
        part = int(match.group(1))
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        if part < 1:
            raise PartitionParseError(f"part {part} in {text!r} is not positive")
        if exponent < 1:
            raise PartitionParseError(f"exponent {exponent} in {text!r} is not positive")
        total += part * exponent
        if max_size is not None and total > max_size:
            raise PartitionParseError(f"{text!r} has size above the limit of {max_size}")
        parts.extend([part] * exponent)
    try:
        return Partition(tuple(parts))
    except PreconditionError as exc:
        raise PartitionParseError(f"{text!r} is not a partition: {exc}") from exc


def format_partition(la: Partition) -> str:
    if not la:
        return EMPTY_TOKEN
    groups = []
    for part, run in groupby(la.parts):
        count = len(list(run))
        groups.append(f"{part}^{count}" if count > 1 else str(part))
    return ",".join(groups)
