"""
Hook arithmetic, e-weight, shallow/steep hooks, L-partitions and the S operator
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from app.partitions.errors import InvariantError, PreconditionError
from app.partitions.partition import (
    Node,
    Partition,
    conjugate,
    format_partition,
    num_parts,
    part_at,
    require_e,
)


class HookClass(str, Enum):
    SHALLOW = "shallow"
    STEEP = "steep"
    NEITHER = "neither"
    BOTH = "both"


def classify(arm: int, leg: int, e: int) -> HookClass:
    shallow = arm >= (e - 1) * leg
    steep = leg >= (e - 1) * arm
    if shallow and steep:
        return HookClass.BOTH
    if shallow:
        return HookClass.SHALLOW
    if steep:
        return HookClass.STEEP
    return HookClass.NEITHER


@dataclass(frozen=True)
class HookRecord:
    node: Node
    arm: int
    leg: int
    hook_length: int
    divisible: bool
    hook_class: HookClass

    def describe(self) -> str:
        row, col = self.node
        return (
            f"({row},{col}) a={self.arm} l={self.leg} h={self.hook_length} "
            f"{self.hook_class.value}"
        )


@dataclass(frozen=True)
class HookProfile:
    """Hook data for every node of a partition at a fixed e"""
    e: int
    records: Tuple[HookRecord, ...]

    @property
    def divisible(self) -> List[HookRecord]:
        return [record for record in self.records if record.divisible]

    @property
    def w(self) -> int:
        return len(self.divisible)

    @property
    def z(self) -> int:
        return sum(1 for record in self.divisible if record.hook_class is HookClass.STEEP)

    @property
    def z_conj(self) -> int:
        return sum(1 for record in self.divisible if record.hook_class is HookClass.SHALLOW)

    @property
    def bad_hooks(self) -> List[HookRecord]:
        return [record for record in self.divisible if record.hook_class is HookClass.NEITHER]

    def record_at(self, row: int, col: int) -> HookRecord:
        for record in self.records:
            if record.node == (row, col):
                return record
        raise KeyError((row, col))


def hook_profile(la: Partition, e: int) -> HookProfile:
    require_e(e)
    columns = conjugate(la).parts
    records = []
    for row, part in enumerate(la.parts, start=1):
        for col in range(1, part + 1):
            arm = part - col
            leg = columns[col - 1] - row
            length = arm + leg + 1
            divisible = length % e == 0
            hook_class = classify(arm, leg, e)
            # a shallow and steep hook has a = l = 0, so h = 1
            if divisible and hook_class is HookClass.BOTH:
                raise InvariantError(f"hook at ({row},{col}) of {la} is both shallow and steep")
            records.append(HookRecord(Node(row, col), arm, leg, length, divisible, hook_class))
    return HookProfile(e=e, records=tuple(records))


def e_weight(la: Partition, e: int) -> int:
    return hook_profile(la, e).w


def z_value(la: Partition, e: int) -> int:
    """Number of steep hooks of length divisible by e"""
    return hook_profile(la, e).z


def z_conj_value(la: Partition, e: int) -> int:
    """Number of shallow hooks of length divisible by e"""
    return hook_profile(la, e).z_conj


def bad_hooks(la: Partition, e: int) -> List[HookRecord]:
    return hook_profile(la, e).bad_hooks


def is_L_partition(la: Partition, e: int) -> bool:
    return not hook_profile(la, e).bad_hooks


def s_value(la: Partition, e: int) -> int:
    """Largest i with λ_i - λ_{i+1} >= e, or 0 when λ is e-restricted"""
    require_e(e)
    for i in range(num_parts(la), 0, -1):
        if part_at(la, i) - part_at(la, i + 1) >= e:
            return i
    return 0


def t_value(la: Partition, e: int) -> int:
    return s_value(conjugate(la), e)


def S_operator(la: Partition, e: int) -> Partition:
    """Sλ = (λ_1-e+1, ..., λ_s-e+1, λ_{s+2}, λ_{s+3}, ...) with s = s(λ)"""
    if not is_L_partition(la, e):
        raise PreconditionError(
            "L-partition", f"{format_partition(la)} is not an L-partition for e={e}"
        )
    s = s_value(la, e)
    parts = tuple(part - e + 1 for part in la.parts[:s]) + la.parts[s + 1:]
    try:
        return Partition(parts)
    except PreconditionError as exc:
        raise InvariantError(f"S applied to {format_partition(la)} gave {parts}") from exc
