"""
Request and response schemas for the operator endpoints.

The command line prints the same models with --json, so both surfaces share
one key set.
"""
from pydantic import BaseModel, Field
from typing import List, Optional

from app.core.config import settings
from app.partitions import HookProfile, HookRecord, Partition, RimData, format_partition
from app.partitions.render import Annotation

MAX_PARTITION_TEXT = 4096


class OperatorRequest(BaseModel):
    """Partition in exponent notation, e.g. "4,3^3,1^5"; "()" is the empty partition"""
    partition: str = Field(..., max_length=MAX_PARTITION_TEXT)
    e: Optional[int] = Field(None, ge=2)
    annotation: Annotation = Annotation.NONE

    class Config:
        schema_extra = {
            "example": {"partition": "3^2,2^2,1", "e": 3}
        }


class PartitionOut(BaseModel):
    partition: List[int]
    text: str

    @classmethod
    def from_partition(cls, la: Partition) -> "PartitionOut":
        return cls(partition=la.to_json(), text=format_partition(la))


class RimOut(BaseModel):
    r: int
    m: int
    l_prime: int
    rim: List[List[int]]
    truncated_rim: List[List[int]]

    @classmethod
    def from_rim(cls, rim: RimData) -> "RimOut":
        return cls(
            r=rim.r,
            m=rim.m,
            l_prime=rim.l_prime,
            rim=[list(node) for node in rim.rim_nodes],
            truncated_rim=[list(node) for node in sorted(rim.truncated_rim)],
        )


class HookRow(BaseModel):
    node: List[int]
    arm: int
    leg: int
    hook_length: int
    divisible: bool
    hook_class: str

    @classmethod
    def from_record(cls, record: HookRecord) -> "HookRow":
        return cls(
            node=list(record.node),
            arm=record.arm,
            leg=record.leg,
            hook_length=record.hook_length,
            divisible=record.divisible,
            hook_class=record.hook_class.value,
        )


class HookTableOut(BaseModel):
    hooks: List[HookRow]
    w: int
    z: int
    z_conj: int

    @classmethod
    def from_profile(cls, profile: HookProfile) -> "HookTableOut":
        return cls(
            hooks=[HookRow.from_record(record) for record in profile.records],
            w=profile.w,
            z=profile.z,
            z_conj=profile.z_conj,
        )


class LPartitionOut(BaseModel):
    is_L_partition: bool
    bad_hook: Optional[HookRow] = None

    @classmethod
    def from_profile(cls, profile: HookProfile) -> "LPartitionOut":
        bad = profile.bad_hooks
        return cls(
            is_L_partition=not bad,
            bad_hook=HookRow.from_record(bad[0]) if bad else None,
        )


class DiagramOut(BaseModel):
    diagram: str


class CheckRequest(BaseModel):
    """Queued verification run"""
    suite: str = "all"
    max_n: int = Field(12, ge=0, le=settings.API_MAX_N)
    e_min: int = Field(2, ge=2, le=settings.API_MAX_E)
    e_max: int = Field(6, ge=2, le=settings.API_MAX_E)


class CheckJobOut(BaseModel):
    job_id: str
    status: str
    reports: Optional[List[dict]] = None
    error: Optional[str] = None
