from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class PathConstraint(str, Enum):
    FREE = 'free'
    NON_NEGATIVE = 'nonnegative'
    HEIGHT_AT_MOST = 'height-at-most'


class PathSpec(BaseModel):
    """Paths from (0,0) with steps (1,1) and (1,-1)."""
    x: int  # number of steps
    y: int  # final height
    constraint: PathConstraint = PathConstraint.FREE
    h: Optional[int] = None  # ceiling for HEIGHT_AT_MOST; implies non-negative

    @classmethod
    def free(cls, x: int, y: int) -> 'PathSpec':
        return cls(x=x, y=y)

    @classmethod
    def dyck(cls, x: int, y: int) -> 'PathSpec':
        return cls(x=x, y=y, constraint=PathConstraint.NON_NEGATIVE)

    @classmethod
    def bounded(cls, x: int, y: int, h: int) -> 'PathSpec':
        return cls(x=x, y=y, constraint=PathConstraint.HEIGHT_AT_MOST, h=h)


class ReturnClass(BaseModel):
    s: int  # contacts with the x-axis after the start
    size: int  # free paths found with s contacts
    dyck_count: int = Field(description="C(n, k-s): non-negative paths with s contacts")
    expected: int = Field(description="C(n, k-s) * 2^s")


class BijectionReport(BaseModel):
    n: int
    k: int
    lhs: int = Field(description="Number of free paths to (n+1+k, n+1-k)")
    rhs: int = Field(description="Sum over s of C(n, k-s) 2^s")
    per_s: List[ReturnClass]
    holds: bool
