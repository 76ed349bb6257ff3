"""
Verification report schemas
"""
from pydantic import BaseModel, Field, root_validator
from typing import List, Optional, Tuple


class Counterexample(BaseModel):
    """A failed instance: the partition (or first partition of a pair) plus diagnostics"""
    partition: List[int]
    details: str


class CensusRow(BaseModel):
    """Counts for one size n: L-partitions versus partitions with MGλ = GTλ"""
    n: int
    l_partitions: int
    mg_equals_gt: int


class VerificationReport(BaseModel):
    """
    Outcome of one check at one value of e over every size in n_range.

    `elapsed` is the number of partitions (or pairs) scanned, which keeps
    serialised reports identical between runs; wall-clock time is logged.
    """
    check_id: str
    e: int
    n_range: Tuple[int, int]
    instances_checked: int
    counterexamples: List[Counterexample] = []
    elapsed: int
    passed: bool = Field(..., alias="pass")
    census: Optional[List[CensusRow]] = None

    class Config:
        allow_population_by_field_name = True

    @root_validator(skip_on_failure=True)
    def pass_matches_counterexamples(cls, values):
        if values["passed"] != (not values["counterexamples"]):
            raise ValueError("pass must be true exactly when there are no counterexamples")
        return values

    def to_json_dict(self) -> dict:
        return self.dict(by_alias=True, exclude_none=True)
