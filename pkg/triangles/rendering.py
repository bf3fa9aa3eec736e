"""
Text rendering of triangle rows for the ``triangle`` command.
"""
from typing import Optional

from core.output import OutputFormat, render_table
from triangles.services import triangle_rows


def table_label(kind: str, m: Optional[int] = None, k: Optional[int] = None) -> str:
    if kind == 'trapezoid':
        return f"trapezoid(m={m})"
    if kind in ('k-analog', 'b-k'):
        return f"{kind}(k={k})"
    return kind


def render_triangle(kind: str, count: int, fmt: OutputFormat,
                    m: Optional[int] = None, k: Optional[int] = None) -> str:
    """Rows 0..count-1 of ``kind`` in the requested format."""
    rows = triangle_rows(kind, count, m=m, k=k)
    return render_table(rows, fmt, label=table_label(kind, m=m, k=k))
