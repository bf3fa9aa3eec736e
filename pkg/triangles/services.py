"""
Entry accessors for the Catalan triangle, the Catalan trapezoids, the
alternating Jacobsthal triangle and its k-analogues.

Out-of-range column indices give 0; negative row indices are caller bugs
and raise ``DomainError``.
"""
import logging
from typing import List, Optional

from core.exceptions import DomainError
from exactmath.numbers import binomial
from triangles.tables import Row, TableKind, table_cache

logger = logging.getLogger("triangles.services")


def _require_row(value: int, name: str) -> None:
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {name}={value}")


# -- Catalan triangle and trapezoids ----------------------------------------

def catalan_entry(n: int, k: int) -> int:
    """C(n,k); 0 when k < 0 or k > n."""
    _require_row(n, "n")
    return table_cache.get(TableKind.catalan()).entry(n, k)


def catalan_number(n: int) -> int:
    _require_row(n, "n")
    return catalan_entry(n, n)


def trapezoid_entry(m: int, n: int, k: int) -> int:
    """C_m(n,k) from the additive recursion; 0 outside 0 <= k <= m+n-1."""
    _require_row(n, "n")
    return table_cache.get(TableKind.trapezoid(m)).entry(n, k)


def trapezoid_closed_form(m: int, n: int, k: int) -> int:
    """
    Binomial-difference form of the trapezoid entry.

    C_m(n,k) = binom(n+k, k) - binom(n+k, k-m) for 0 <= k <= m+n-1.
    """
    if m < 1:
        raise DomainError(f"Catalan trapezoid needs m >= 1, got m={m}")
    _require_row(n, "n")
    if k < 0 or k > m + n - 1:
        return 0
    return binomial(n + k, k) - binomial(n + k, k - m)


# -- alternating Jacobsthal triangle and k-analogues -------------------------

def alt_jacobsthal_entry(m: int, t: int) -> int:
    """A(m,t) = A(m-1,t-1) - A(m-1,t) with A(m,0) = 1."""
    _require_row(m, "m")
    return table_cache.get(TableKind.alt_jacobsthal()).entry(m, t)


def k_analog_entry(k: int, m: int, t: int) -> int:
    """A_k(m,t), same recursion with A_k(m,0) = k^floor(m/2)."""
    _require_row(m, "m")
    if k == 1:
        return alt_jacobsthal_entry(m, t)
    return table_cache.get(TableKind.k_analog(k)).entry(m, t)


def b_entry(m: int, t: int) -> int:
    """B(m,t) = A(m, m-t)."""
    _require_row(m, "m")
    if t < 0 or t > m:
        return 0
    return alt_jacobsthal_entry(m, m - t)


def b_k_entry(k: int, m: int, t: int) -> int:
    """B_k(m,t) = A_k(m, m-t)."""
    _require_row(m, "m")
    if t < 0 or t > m:
        return 0
    return k_analog_entry(k, m, m - t)


# -- subsequences ------------------------------------------------------------

def a_entry(m: int, t: int) -> int:
    """a_{m,t} = A(t+2m-2, t): every other entry down column t, starting at A(t,t)."""
    if m < 1 or t < 1:
        raise DomainError(f"a_(m,t) is defined for m, t >= 1, got m={m}, t={t}")
    return alt_jacobsthal_entry(t + 2 * m - 2, t)


def b_sub_entry(m: int, t: int) -> int:
    """b_{m,t} = -A(t+2m-1, t), the interleaved entries of column t with sign flipped."""
    if m < 1 or t < 1:
        raise DomainError(f"b_(m,t) is defined for m, t >= 1, got m={m}, t={t}")
    return -alt_jacobsthal_entry(t + 2 * m - 1, t)


def c_entry(m: int, t: int) -> int:
    """c_{m,t} = (-1)^t B(m+t+1, t)."""
    if m < 0 or t < 0:
        raise DomainError(f"c_(m,t) is defined for m, t >= 0, got m={m}, t={t}")
    sign = -1 if t % 2 else 1
    return sign * b_entry(m + t + 1, t)


def diagonal_sum(k: int, d: int, include_zero_column: bool = False) -> int:
    """
    Sum of A_k(m,t) along the anti-diagonal m + t = d.

    The t = 0 column is left out unless ``include_zero_column`` is set.
    """
    _require_row(d, "d")
    first = 0 if include_zero_column else 1
    return sum(k_analog_entry(k, d - t, t) for t in range(first, d // 2 + 1))


# -- row export --------------------------------------------------------------

TRIANGLE_KINDS = ('catalan', 'trapezoid', 'alt-jacobsthal', 'b', 'k-analog', 'b-k')


def triangle_rows(kind: str, count: int, m: Optional[int] = None, k: Optional[int] = None) -> List[Row]:
    """
    Rows 0..count-1 of a named table, as used by the ``triangle`` command.

    Args:
        kind: One of ``TRIANGLE_KINDS``
        count: Number of rows (>= 1)
        m: Complete columns of a trapezoid
        k: Parameter of the k-analogue kinds

    Returns:
        List of row tuples

    Raises:
        DomainError: On an unknown kind, a missing parameter or count < 1
    """
    if count < 1:
        raise DomainError(f"Need at least one row, got {count}")
    if kind == 'catalan':
        return table_cache.get(TableKind.catalan()).rows(count)
    if kind == 'trapezoid':
        if m is None:
            raise DomainError("trapezoid needs -m")
        return table_cache.get(TableKind.trapezoid(m)).rows(count)
    if kind in ('alt-jacobsthal', 'b'):
        rows = table_cache.get(TableKind.alt_jacobsthal()).rows(count)
    elif kind in ('k-analog', 'b-k'):
        if k is None:
            raise DomainError(f"{kind} needs -k")
        kind_of_table = TableKind.alt_jacobsthal() if k == 1 else TableKind.k_analog(k)
        rows = table_cache.get(kind_of_table).rows(count)
    else:
        raise DomainError(f"Unknown triangle kind '{kind}', expected one of {', '.join(TRIANGLE_KINDS)}")
    if kind in ('b', 'b-k'):
        rows = [tuple(reversed(row)) for row in rows]
    logger.debug(f"Exported {count} rows of {kind}")
    return rows
