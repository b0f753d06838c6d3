# designs/report.py
"""Pydantic models for everything the package reports.

Field declaration order is the JSON key order, so dumps are stable.
"""

from fractions import Fraction
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, BeforeValidator, model_validator

from designs.exact import format_rational, parse_rational


def _canonical_rational(value) -> str:
    if isinstance(value, str):
        value = parse_rational(value)
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise ValueError(f"expected an exact rational, got {value!r}")
    return format_rational(value)


Rational = Annotated[str, BeforeValidator(_canonical_rational)]
Verdict = Union[bool, Literal["n/a"]]


class OrthogonalityPair(BaseModel):
    r: int
    s: int
    value: Rational
    expected: Rational
    passed: bool


class OrthogonalityReport(BaseModel):
    n: int
    max_degree: int
    pairs: list[OrthogonalityPair]

    @property
    def all_passed(self) -> bool:
        return all(p.passed for p in self.pairs)


class MomentEntry(BaseModel):
    i: int
    value: Rational
    space_value: Rational
    equal: bool


class DualEntry(BaseModel):
    k: int
    value: Rational


class Criteria(BaseModel):
    moments: bool
    dual: Verdict
    tcrit: Verdict


class Bounds(BaseModel):
    sm: int
    cor2_t2: int
    meets_sm_equality: bool


class Transitivity(BaseModel):
    max_t: int
    sharp: bool
    is_group: bool


class DesignReport(BaseModel):
    n: int
    size: int
    t: int
    frequencies: list[Rational]
    moments: list[MomentEntry]
    dual_frequencies: Optional[list[DualEntry]]
    criteria: Criteria
    bounds: Bounds
    transitivity: Transitivity

    @model_validator(mode="after")
    def check_criteria_agree(self) -> "DesignReport":
        verdicts = {self.criteria.moments, self.criteria.dual, self.criteria.tcrit} - {"n/a"}
        if len(verdicts) > 1:
            raise ValueError(f"design criteria disagree: {self.criteria}")
        if len(self.frequencies) != self.n + 1:
            raise ValueError("frequency vector must have n+1 entries")
        return self

    @property
    def is_design(self) -> bool:
        return self.criteria.moments


class SizeCount(BaseModel):
    size: int
    checked: int


class SearchCertificate(BaseModel):
    status: Literal["found", "exhausted", "inconclusive"]
    n: int
    t: int
    max_size: Optional[int] = None
    predicate: str
    budget: int
    nodes: int
    counts: list[SizeCount] = []
    permutations: Optional[list[str]] = None
    report: Optional[DesignReport] = None
    cut_branches: list[int] = []

    @model_validator(mode="after")
    def check_found_has_witness(self) -> "SearchCertificate":
        if self.status == "found" and (self.permutations is None or self.report is None):
            raise ValueError("a 'found' certificate needs its permutations and report")
        if self.status != "found" and self.permutations is not None:
            raise ValueError(f"a '{self.status}' certificate carries no permutations")
        return self

    @property
    def canonical(self) -> bool:
        """A found set is the lowest-index one only if no earlier branch was cut short."""
        return self.status == "found" and not self.cut_branches
