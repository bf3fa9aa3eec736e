"""
Cross-checks of generated terms against bundled OEIS snapshots.
"""
import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from django.conf import settings

from core.exceptions import DomainError, FormatError
from oeisdata.bfile import parse_bfile
from oeisdata.generators import CHECKS, TRIANGLE_READINGS, Generator, get_check, get_generator
from oeisdata.models import MatchReport, Mismatch, Provenance, SequenceRef
from polyfam.families import modified_catalan_poly

logger = logging.getLogger("oeisdata.services")

SHIFT_WINDOW = 3

# header line marking a snapshot that holds only printed terms
TRANSCRIBED_NOTE = 'provenance: transcribed'


def _data_dir() -> Path:
    return Path(settings.OEIS_DATA_DIR)


def bundled_path(oeis_id: str) -> Path:
    if len(oeis_id) != 7 or not oeis_id.startswith('A') or not oeis_id[1:].isdigit():
        raise DomainError(f"Not an OEIS id: '{oeis_id}'")
    return _data_dir() / f"b{oeis_id[1:]}.txt"


def load_bundled(oeis_id: str) -> SequenceRef:
    """
    Load the bundled snapshot of ``oeis_id``.

    Raises:
        DomainError: If no snapshot is bundled for the id
        FormatError, GapError: If the snapshot is malformed
    """
    path = bundled_path(oeis_id)
    if not path.exists():
        raise DomainError(f"No bundled b-file for {oeis_id} in {_data_dir()}")
    seq = parse_bfile(path.read_text(encoding='utf-8'), oeis_id=oeis_id, provenance=Provenance.BUNDLED)
    if TRANSCRIBED_NOTE in seq.notes:
        seq = seq.model_copy(update={'provenance': Provenance.TRANSCRIBED})
    return seq


def load_file(path: str) -> SequenceRef:
    """Parse a user-supplied b-file."""
    target = Path(path)
    if not target.exists():
        raise FormatError(f"b-file not found: {path}")
    return parse_bfile(target.read_text(encoding='utf-8'))


def bundled_ids() -> List[str]:
    return sorted(f"A{p.stem[1:]}" for p in _data_dir().glob('b[0-9][0-9][0-9][0-9][0-9][0-9].txt'))


def _shift_order(window: int) -> List[int]:
    order = [0]
    for distance in range(1, window + 1):
        order.extend((-distance, distance))
    return order


def _compare(seq: SequenceRef, generator: Generator, shift: int, count: int) -> Tuple[int, Optional[Mismatch]]:
    for i in range(count):
        index = seq.offset + i
        expected = seq.terms[i]
        try:
            got = generator(index + shift)
        except ValueError:
            return i, Mismatch(index=index, expected=expected, got=None)
        if got != expected:
            return i, Mismatch(index=index, expected=expected, got=got)
    return count, None


def cross_check(seq: SequenceRef, generator: str, max_terms: int, window: int = SHIFT_WINDOW) -> MatchReport:
    """
    Compare the first ``max_terms`` terms of ``seq`` with a generator.

    Shifts are tried in the order 0, -1, +1, ... up to ``window``; the first
    one matching the whole prefix wins. Without a full match the shift with
    the longest matching prefix is reported.

    Raises:
        UnknownGenerator: If ``generator`` is not registered
        DomainError: If ``max_terms`` < 1
    """
    fn = get_generator(generator)
    if max_terms < 1:
        raise DomainError(f"max_terms must be at least 1, got {max_terms}")
    count = min(max_terms, len(seq.terms))

    best: Optional[Tuple[int, int, Optional[Mismatch]]] = None
    for shift in _shift_order(window):
        matched, mismatch = _compare(seq, fn, shift, count)
        if best is None or matched > best[1]:
            best = (shift, matched, mismatch)
        if mismatch is None:
            break

    shift, matched, mismatch = best
    full = mismatch is None
    finding = None
    if full and shift != 0:
        finding = f"{seq.oeis_id} matches {generator} only with the index shifted by {shift:+d}"
    report = MatchReport(
        sequence_id=seq.oeis_id,
        generator=generator,
        declared_offset=seq.offset,
        shift=shift,
        aligned_offset=seq.offset + shift,
        matched_length=matched,
        checked_length=count,
        first_mismatch=mismatch,
        matched=full,
        finding=finding,
        provenance=seq.provenance,
    )
    if full:
        logger.info(f"{seq.oeis_id} vs {generator}: {matched} terms match at shift {shift:+d}")
    else:
        logger.warning(f"{seq.oeis_id} vs {generator}: mismatch at index {mismatch.index} "
                       f"(expected {mismatch.expected}, got {mismatch.got})")
    return report


def run_check(name: str) -> Tuple[MatchReport, bool]:
    """
    Run a catalog check on its bundled sequence.

    Returns:
        The report, and whether it passed: a full match at the expected
        shift covering at least the catalog's minimum number of terms
    """
    check = get_check(name)
    seq = load_bundled(check.oeis_id)
    report = cross_check(seq, check.generator, len(seq.terms))
    passed = report.matched and report.shift == check.expected_shift and report.matched_length >= check.min_terms
    return report, passed


def run_all_checks() -> Dict[str, Tuple[MatchReport, bool]]:
    return {name: run_check(name) for name in CHECKS}


def check_triangle_readings(oeis_id: str = 'A220074') -> Dict[str, MatchReport]:
    """Compare a flattened triangle with the row and reversed-row readings of A(m,t)."""
    seq = load_bundled(oeis_id)
    return {reading: cross_check(seq, reading, len(seq.terms), window=0) for reading in TRIANGLE_READINGS}


def sigma_comparison(count: int = 12) -> List[Dict[str, int]]:
    """Rows (n, F~_(n,n)(3), sigma_n) for n < count, taken from the bundled A059714."""
    seq = load_bundled('A059714')
    if count < 1 or count > len(seq.terms):
        raise DomainError(f"Conjecture data covers n = 0..{len(seq.terms) - 1}, asked for {count} rows")
    rows = []
    for i in range(count):
        n = seq.offset + i
        rows.append({'n': n, 'value': modified_catalan_poly(n, n)(3), 'sigma': seq.terms[i]})
    return rows
