"""
Reading and writing OEIS b-files.

A b-file has one ``index value`` pair per line; lines starting with ``#``
and blank lines are ignored. Indices must be contiguous.
"""
import logging
import re
from typing import List, Optional

from core.exceptions import FormatError, GapError
from oeisdata.models import Provenance, SequenceRef

logger = logging.getLogger("oeisdata.bfile")

OEIS_ID = re.compile(r'\bA\d{6}\b')


def parse_bfile(text: str, oeis_id: Optional[str] = None,
                provenance: Provenance = Provenance.USER) -> SequenceRef:
    """
    Parse b-file text.

    Args:
        text: Contents of the file
        oeis_id: Sequence id; taken from the first comment naming one when omitted
        provenance: Where the text came from

    Returns:
        SequenceRef whose offset is the first index

    Raises:
        FormatError: On a line that is not two integers, or a file without terms
        GapError: If an index does not follow its predecessor
    """
    notes: List[str] = []
    terms: List[int] = []
    offset = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            note = line.lstrip('#').strip()
            notes.append(note)
            if oeis_id is None:
                found = OEIS_ID.search(note)
                if found:
                    oeis_id = found.group(0)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'index value', got '{line}'")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: not an integer pair: '{line}'")
        if offset is None:
            offset = index
        elif index != offset + len(terms):
            raise GapError(f"line {lineno}: index {index} follows {offset + len(terms) - 1}")
        terms.append(value)

    if offset is None:
        raise FormatError("b-file contains no terms")
    return SequenceRef(oeis_id=oeis_id or '', offset=offset, terms=terms, provenance=provenance, notes=notes)


def serialize_bfile(seq: SequenceRef) -> str:
    """b-file text for ``seq``; header notes are written back as comments."""
    lines = []
    if seq.oeis_id and not any(seq.oeis_id in note for note in seq.notes):
        lines.append(f"# {seq.oeis_id}")
    lines.extend(f"# {note}" for note in seq.notes)
    lines.extend(f"{index} {term}" for index, term in zip(seq.index_range(), seq.terms))
    return '\n'.join(lines) + '\n'
