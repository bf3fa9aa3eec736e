"""
Registry of the identities the sweep engine can check.

Each record pairs two exact evaluators with the parameter domain on which
the identity is claimed. Catalog modules register their records at import
time; ``identities.catalog`` pulls all of them in.
"""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

from core.exceptions import UnknownIdentity

logger = logging.getLogger("identities.registry")

Box = Dict[str, Tuple[int, int]]


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    anchor: str  # short description of the statement
    quote: str  # verbatim phrase the statement is introduced with
    params: Tuple[str, ...]
    domain: Callable[..., bool]  # total on integers, never raises
    lhs: Callable[..., Any]
    rhs: Callable[..., Any]
    domain_text: str
    default_box: Box
    notes: str = ''

    def in_domain(self, values: Tuple[int, ...]) -> bool:
        return bool(self.domain(*values))


_RECORDS: Dict[str, IdentityRecord] = {}


def register(record: IdentityRecord) -> IdentityRecord:
    """
    Add ``record`` to the registry.

    Raises:
        ValueError: If the id is taken or the default box does not name
            exactly the record's parameters
    """
    if record.id in _RECORDS and _RECORDS[record.id] is not record:
        raise ValueError(f"Identity '{record.id}' is already registered")
    if set(record.default_box) != set(record.params):
        raise ValueError(f"Identity '{record.id}': default box must cover {record.params}")
    _RECORDS[record.id] = record
    logger.debug(f"Registered identity {record.id}")
    return record


def get_record(identity_id: str) -> IdentityRecord:
    """Look up a record; ``I-main1`` is accepted for ``main1``."""
    record = _RECORDS.get(identity_id)
    if record is None and identity_id.startswith('I-'):
        record = _RECORDS.get(identity_id[2:])
    if record is None:
        raise UnknownIdentity(f"Unknown identity '{identity_id}'; run 'identity --list' for the catalog")
    return record


def all_records() -> List[IdentityRecord]:
    return list(_RECORDS.values())


def identity_ids() -> List[str]:
    return list(_RECORDS)
