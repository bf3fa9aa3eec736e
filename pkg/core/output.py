"""
Rendering of tables and reports in the three output formats.

``plain`` is for people and may change; ``json`` is the stable contract
(sorted keys, integers in decimal); ``csv`` goes through pandas with every
cell as a decimal string.
"""
import json
import logging
from enum import Enum
from pathlib import Path
from typing import Any, List, Optional, Sequence

import pandas as pd

from core.exceptions import DomainError
from core.utils import to_jsonable

logger = logging.getLogger('core.output')


class OutputFormat(str, Enum):
    PLAIN = 'plain'
    JSON = 'json'
    CSV = 'csv'

    @classmethod
    def choices(cls) -> List[str]:
        return [member.value for member in cls]


def render_plain_rows(rows: Sequence[Sequence[Any]]) -> str:
    """
    Right-justify every entry to the widest entry of the whole table.
    """
    cells = [[str(v) for v in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=0)
    lines = [' '.join(c.rjust(width) for c in row) for row in cells]
    return '\n'.join(line.rstrip() for line in lines) + ('\n' if lines else '')


def rows_to_frame(rows: Sequence[Sequence[Any]], columns: Optional[Sequence[str]] = None) -> pd.DataFrame:
    """Ragged rows padded with empty strings; all cells kept as text."""
    width = max((len(row) for row in rows), default=0)
    if columns is None:
        columns = [str(i) for i in range(width)]
    data = [[str(v) for v in row] + [''] * (width - len(row)) for row in rows]
    return pd.DataFrame(data, columns=list(columns), dtype=str)


def render_csv_rows(rows: Sequence[Sequence[Any]], columns: Optional[Sequence[str]] = None) -> str:
    return rows_to_frame(rows, columns).to_csv(index=False, lineterminator='\n')


def render_json(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), sort_keys=True) + '\n'


def render_records_csv(records: Sequence[dict]) -> str:
    """One CSV line per flat record; nested values are JSON-encoded into their cell."""
    if not records:
        return ''
    flat = []
    for record in records:
        flat.append({
            key: value if isinstance(value, str) else json.dumps(to_jsonable(value), sort_keys=True)
            for key, value in record.items()
        })
    frame = pd.DataFrame(flat, dtype=str)
    frame = frame[sorted(frame.columns)]
    return frame.to_csv(index=False, lineterminator='\n')


def render_table(rows: Sequence[Sequence[Any]], fmt: OutputFormat, label: str = '') -> str:
    if fmt == OutputFormat.PLAIN:
        return render_plain_rows(rows)
    if fmt == OutputFormat.JSON:
        return render_json({'table': label, 'rows': [list(r) for r in rows]})
    return render_csv_rows(rows)


def write_report(path: str, records: Sequence[dict]) -> Path:
    """
    Export report records to ``.json`` or ``.csv`` depending on the suffix.
    """
    target = Path(path)
    if target.suffix == '.json':
        text = render_json(list(records))
    elif target.suffix == '.csv':
        text = render_records_csv(records)
    else:
        raise DomainError(f"Report file must end in .json or .csv, got '{path}'")
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding='utf-8')
    logger.info(f"Wrote {len(records)} report records to {target}")
    return target
