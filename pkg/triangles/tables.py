"""
Lazily grown triangular and trapezoidal integer tables.

Every table is described by a ``TableKind``; ``TableCache`` keeps one table
per kind for the life of the process, so identity sweeps that hit the same
rows over and over only pay for each row once. Growth is serialized behind a
lock; completed rows are immutable tuples and can be shared freely.
"""
import logging
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from core.exceptions import DomainError

logger = logging.getLogger("triangles.tables")


class TableFamily(str, Enum):
    CATALAN = 'catalan'
    TRAPEZOID = 'trapezoid'
    ALT_JACOBSTHAL = 'alt-jacobsthal'
    K_ANALOG = 'k-analog'


@dataclass(frozen=True)
class TableKind:
    family: TableFamily
    param: Optional[int] = None

    @classmethod
    def catalan(cls) -> "TableKind":
        return cls(TableFamily.CATALAN)

    @classmethod
    def trapezoid(cls, m: int) -> "TableKind":
        if m < 1:
            raise DomainError(f"Catalan trapezoid needs m >= 1 complete columns, got m={m}")
        return cls(TableFamily.TRAPEZOID, m)

    @classmethod
    def alt_jacobsthal(cls) -> "TableKind":
        return cls(TableFamily.ALT_JACOBSTHAL)

    @classmethod
    def k_analog(cls, k: int) -> "TableKind":
        if k == 0:
            raise DomainError("k-analogue is defined for nonzero k only")
        return cls(TableFamily.K_ANALOG, k)

    def row_length(self, n: int) -> int:
        if self.family == TableFamily.TRAPEZOID:
            return self.param + n
        return n + 1

    def label(self) -> str:
        if self.param is None:
            return self.family.value
        return f"{self.family.value}({self.param})"


Row = Tuple[int, ...]


class TriangleTable:
    """Rows of one table kind, grown on demand."""

    def __init__(self, kind: TableKind):
        self.kind = kind
        self._rows: List[Row] = [self._first_row()]
        self._lock = threading.Lock()

    def _first_row(self) -> Row:
        if self.kind.family == TableFamily.TRAPEZOID:
            return (1,) * self.kind.param
        return (1,)

    def _next_row(self, prev: Row, n: int) -> Row:
        length = self.kind.row_length(n)
        if self.kind.family in (TableFamily.CATALAN, TableFamily.TRAPEZOID):
            # sum of the entry above and the entry to the left
            row = [prev[0]]
            for k in range(1, length):
                above = prev[k] if k < len(prev) else 0
                row.append(row[k - 1] + above)
            return tuple(row)
        base = 1 if self.kind.family == TableFamily.ALT_JACOBSTHAL else self.kind.param ** (n // 2)
        row = [base]
        for t in range(1, length):
            above = prev[t] if t < len(prev) else 0
            row.append(prev[t - 1] - above)
        return tuple(row)

    def _grow_to(self, n: int) -> None:
        with self._lock:
            start = len(self._rows)
            while len(self._rows) <= n:
                size = len(self._rows)
                self._rows.append(self._next_row(self._rows[-1], size))
            if n >= start:
                logger.debug(f"Grew {self.kind.label()} table to row {n}")

    def row(self, n: int) -> Row:
        if n < 0:
            raise DomainError(f"Row index must be non-negative, got {n} for {self.kind.label()}")
        if n >= len(self._rows):
            self._grow_to(n)
        return self._rows[n]

    def rows(self, count: int) -> List[Row]:
        if count <= 0:
            return []
        self.row(count - 1)
        return list(self._rows[:count])

    def entry(self, n: int, k: int) -> int:
        row = self.row(n)
        if 0 <= k < len(row):
            return row[k]
        return 0

    def __len__(self):
        return len(self._rows)


class TableCache:
    """
    Singleton holding one ``TriangleTable`` per kind.
    """
    _instance: Optional['TableCache'] = None
    _tables: Dict[TableKind, TriangleTable]
    _lock: threading.Lock

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._tables = {}
            cls._instance._lock = threading.Lock()
        return cls._instance

    def get(self, kind: TableKind) -> TriangleTable:
        table = self._tables.get(kind)
        if table is None:
            with self._lock:
                table = self._tables.get(kind)
                if table is None:
                    logger.info(f"Creating table {kind.label()}")
                    table = TriangleTable(kind)
                    self._tables[kind] = table
        return table

    def clear_cache(self):
        """
        Drop every table; the next access rebuilds from row 0.
        """
        logger.info("Clearing table cache")
        with self._lock:
            self._tables = {}


# Global instance for easy access
table_cache = TableCache()
