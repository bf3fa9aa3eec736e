from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator


class Provenance(str, Enum):
    BUNDLED = 'bundled'
    TRANSCRIBED = 'transcribed'  # bundled, but only the terms printed in the source text
    USER = 'user'


class SequenceRef(BaseModel):
    """A contiguous run of terms of an OEIS sequence."""
    oeis_id: str = ''  # e.g. "A007179"; empty when the file carries no id
    offset: int  # index of the first term
    terms: List[int]
    provenance: Provenance = Provenance.USER
    notes: List[str] = Field(default_factory=list, description="Header comment lines without the leading '#'")

    @field_validator('terms')
    @classmethod
    def terms_not_empty(cls, value):
        if not value:
            raise ValueError("a sequence needs at least one term")
        return value

    def index_range(self) -> range:
        return range(self.offset, self.offset + len(self.terms))


class Mismatch(BaseModel):
    index: int  # sequence index, before shifting
    expected: int  # bundled term
    got: Optional[int] = None  # generator value; None when the generator is undefined there


class MatchReport(BaseModel):
    sequence_id: str
    generator: str
    declared_offset: int
    shift: int = Field(description="Generator index minus sequence index for the reported alignment")
    aligned_offset: int = Field(description="Generator index of the first term")
    matched_length: int
    checked_length: int
    first_mismatch: Optional[Mismatch] = None
    matched: bool
    finding: Optional[str] = Field(default=None, description="Set whenever the alignment needed a nonzero shift")
    provenance: Provenance = Provenance.USER
