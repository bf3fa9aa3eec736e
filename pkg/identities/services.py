"""
Checking and sweeping registered identities.
"""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from django.conf import settings

import identities.catalog  # noqa: F401
from core.exceptions import DomainError
from core.logging_filters import new_run_id
from core.utils import chunked, format_params, to_jsonable
from identities.models import CheckResult, Failure, IdentitySummary, SweepReport
from identities.registry import Box, IdentityRecord, all_records, get_record

logger = logging.getLogger("identities.services")

Params = Union[Mapping[str, int], Sequence[int]]

# tuples handed to one worker at a time
CHUNK_SIZE = 64


def _values(record: IdentityRecord, params: Params) -> Tuple[int, ...]:
    if isinstance(params, Mapping):
        missing = [p for p in record.params if params.get(p) is None]
        if missing:
            raise DomainError(f"Identity '{record.id}' needs {', '.join(missing)}")
        extra = sorted(set(params) - set(record.params))
        if extra:
            raise DomainError(f"Identity '{record.id}' takes no parameter {', '.join(extra)}")
        return tuple(int(params[p]) for p in record.params)
    values = tuple(int(v) for v in params)
    if len(values) != len(record.params):
        raise DomainError(f"Identity '{record.id}' takes {len(record.params)} parameters, got {len(values)}")
    return values


def _evaluate(record: IdentityRecord, values: Tuple[int, ...], exploratory: bool) -> CheckResult:
    named = dict(zip(record.params, values))
    try:
        lhs = record.lhs(*values)
        rhs = record.rhs(*values)
    except Exception as e:
        logger.exception(f"{record.id} raised at {format_params(named)}",
                         extra={'identity': record.id})
        return CheckResult(identity=record.id, params=named, holds=False,
                           error=f"{type(e).__name__}: {e}", exploratory=exploratory)
    return CheckResult(identity=record.id, params=named, holds=lhs == rhs,
                       lhs=to_jsonable(lhs), rhs=to_jsonable(rhs), exploratory=exploratory)


def check(identity_id: str, params: Params, unsafe_domain: bool = False) -> CheckResult:
    """
    Evaluate one identity at one parameter tuple.

    Args:
        identity_id: Registered identity id
        params: Mapping by parameter name, or values in the record's order
        unsafe_domain: Evaluate even outside the stated domain

    Returns:
        CheckResult with both sides; ``exploratory`` is set outside the domain

    Raises:
        UnknownIdentity: If the id is not registered
        DomainError: If the tuple lies outside the domain and ``unsafe_domain`` is off
    """
    record = get_record(identity_id)
    values = _values(record, params)
    inside = record.in_domain(values)
    if not inside and not unsafe_domain:
        raise DomainError(f"{record.id} is stated for {record.domain_text}; "
                          f"got {format_params(dict(zip(record.params, values)))}")
    return _evaluate(record, values, exploratory=not inside)


def resolve_box(record: IdentityRecord, box: Optional[Mapping[str, Tuple[int, int]]] = None) -> Box:
    """
    The record's default box with ``box`` ranges laid over it.

    Raises:
        DomainError: If ``box`` names a parameter the identity does not take
            or holds an empty range
    """
    resolved = dict(record.default_box)
    for name, (low, high) in (box or {}).items():
        if name not in record.params:
            raise DomainError(f"Identity '{record.id}' has no parameter '{name}'; it takes {', '.join(record.params)}")
        if low > high:
            raise DomainError(f"Empty range for {name}: {low} > {high}")
        resolved[name] = (low, high)
    return {name: resolved[name] for name in record.params}


def _tuples(record: IdentityRecord, box: Box) -> List[Tuple[int, ...]]:
    ranges = [range(box[name][0], box[name][1] + 1) for name in record.params]
    return list(product(*ranges))


def _run_chunk(record: IdentityRecord, chunk: List[Tuple[int, ...]], unsafe_domain: bool):
    checked, skipped, failures = 0, 0, []
    for values in chunk:
        inside = record.in_domain(values)
        if not inside and not unsafe_domain:
            skipped += 1
            continue
        checked += 1
        result = _evaluate(record, values, exploratory=not inside)
        if not result.holds:
            failures.append(Failure(params=result.params, lhs=result.lhs, rhs=result.rhs, error=result.error))
    return checked, skipped, failures


def sweep(identity_id: str, box: Optional[Mapping[str, Tuple[int, int]]] = None,
          workers: Optional[int] = None, unsafe_domain: bool = False,
          run_id: Optional[str] = None) -> SweepReport:
    """
    Check an identity at every tuple of a box.

    Tuples are visited in lexicographic order of the record's parameters and
    failures are reported in that order whatever the worker count. Tuples
    outside the domain are skipped unless ``unsafe_domain`` is set, in which
    case the report is marked exploratory. An evaluator error counts as a
    failure of that tuple.

    Args:
        identity_id: Registered identity id
        box: Inclusive ranges by parameter name; missing parameters use the
            record's default box
        workers: Thread count, ``settings.SWEEP_WORKERS`` when None
        unsafe_domain: Also evaluate tuples outside the domain
        run_id: Correlation id for the log lines, generated when None

    Raises:
        UnknownIdentity: If the id is not registered
        DomainError: If the box is malformed
    """
    record = get_record(identity_id)
    resolved = resolve_box(record, box)
    workers = workers or settings.SWEEP_WORKERS
    if workers < 1:
        raise DomainError(f"Worker count must be positive, got {workers}")
    run_id = run_id or new_run_id()
    log_extra = {'identity': record.id, 'run_id': run_id}

    tuples = _tuples(record, resolved)
    logger.info(f"Sweeping {record.id} over {len(tuples)} tuples with {workers} worker(s)", extra=log_extra)
    started = time.perf_counter()

    chunks = chunked(tuples, CHUNK_SIZE) if tuples else []
    if workers == 1 or len(chunks) <= 1:
        results = [_run_chunk(record, chunk, unsafe_domain) for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            # map keeps chunk order
            results = list(pool.map(lambda chunk: _run_chunk(record, chunk, unsafe_domain), chunks))

    checked = sum(r[0] for r in results)
    skipped = sum(r[1] for r in results)
    failures = [f for r in results for f in r[2]]
    millis = int((time.perf_counter() - started) * 1000)

    for failure in failures[:10]:
        logger.warning(f"{record.id} fails at {format_params(failure.params)}: "
                       f"{failure.error or f'{failure.lhs} != {failure.rhs}'}", extra=log_extra)
    if failures:
        logger.warning(f"{record.id}: {len(failures)} failure(s) in {checked} checked tuples", extra=log_extra)
    else:
        logger.info(f"{record.id}: verified {checked} tuples, skipped {skipped}, {millis} ms", extra=log_extra)

    return SweepReport(
        id=record.id,
        box={name: list(bounds) for name, bounds in resolved.items()},
        checked=checked,
        skipped=skipped,
        failures=failures,
        millis=millis,
        verified=not failures,
        exploratory=unsafe_domain,
        run_id=run_id,
    )


def sweep_all(workers: Optional[int] = None, unsafe_domain: bool = False) -> Iterator[SweepReport]:
    """Sweep every registered identity over its default box, in catalog order."""
    run_id = new_run_id()
    for record in all_records():
        yield sweep(record.id, workers=workers, unsafe_domain=unsafe_domain, run_id=run_id)


def summarize(record: IdentityRecord) -> IdentitySummary:
    return IdentitySummary(
        id=record.id,
        anchor=record.anchor,
        quote=record.quote,
        params=list(record.params),
        domain=record.domain_text,
        default_box={name: list(bounds) for name, bounds in record.default_box.items()},
        notes=record.notes,
    )


def list_identities() -> List[IdentitySummary]:
    return [summarize(record) for record in all_records()]


def failure_params(report: SweepReport) -> List[Dict[str, int]]:
    return [failure.params for failure in report.failures]
