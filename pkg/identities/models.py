from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class CheckResult(BaseModel):
    """One identity evaluated at one parameter tuple."""
    identity: str
    params: Dict[str, int]
    holds: bool
    lhs: Any = None  # integers, coefficient lists or lists of those
    rhs: Any = None
    error: Optional[str] = None  # set when an evaluator raised
    exploratory: bool = False  # tuple lies outside the identity's domain


class Failure(BaseModel):
    params: Dict[str, int]
    lhs: Any = None
    rhs: Any = None
    error: Optional[str] = None


class SweepReport(BaseModel):
    id: str
    box: Dict[str, List[int]] = Field(description="Inclusive [low, high] range per parameter")
    checked: int = 0  # tuples evaluated
    skipped: int = 0  # tuples outside the domain
    failures: List[Failure] = Field(default_factory=list)
    millis: int = 0
    verified: bool = True
    exploratory: bool = False  # domain check was turned off
    run_id: str = ''

    @model_validator(mode='after')
    def verified_iff_no_failures(self):
        if self.verified != (not self.failures):
            raise ValueError("a sweep is verified exactly when it has no failures")
        return self


class IdentitySummary(BaseModel):
    id: str
    anchor: str
    quote: str
    params: List[str]
    domain: str
    default_box: Dict[str, List[int]]
    notes: str = ''
