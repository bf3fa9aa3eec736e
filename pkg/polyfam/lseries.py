"""
The column series L_l(x) and L_(k,l)(x): Q(x,q) = sum_l L_l(x) q^l.

The recursion is the normative definition; the closed forms for l <= 3 and
the q-expansion of Q are kept as independent cross-checks.
"""
import logging
from typing import List

from core.exceptions import DomainError
from exactmath.series import BiPoly, RationalGF, integer_series
from genfun.registry import coefficient_stream, make_id

logger = logging.getLogger("polyfam.lseries")


def _check(ell: int, order: int) -> None:
    if ell < 0 or order < 0:
        raise DomainError(f"L series needs l >= 0 and order >= 0, got l={ell}, order={order}")


def _next(previous: List[int], numerator: int, ell: int, order: int) -> List[int]:
    # (1 - x) L_(l+1) = -x L_l + numerator * x^(l+2)
    out = []
    running = 0
    for i in range(order + 1):
        term = -previous[i - 1] if i >= 1 else 0
        if i == ell + 2:
            term += numerator
        running += term
        out.append(running)
    return out


def lk_series(k: int, ell: int, order: int) -> List[int]:
    """
    Coefficients of L_(k,l)(x) up to ``x**order``.

    Args:
        k: Nonzero k-analogue parameter (k = 1 gives L_l)
        ell: Power of q the series collects
        order: Highest power of x

    Returns:
        List of ``order + 1`` integers
    """
    _check(ell, order)
    if k == 0:
        raise DomainError("L_(k,l) needs k != 0")
    series = [0] + [1] * order
    for step in range(ell):
        series = _next(series, k ** ((step + 1) // 2), step, order)
    return series


def l_series(ell: int, order: int) -> List[int]:
    """Coefficients of L_l(x) = sum_m B(m,l) x^m up to ``x**order``."""
    return lk_series(1, ell, order)


def lk_series_from_q_expansion(k: int, ell: int, order: int) -> List[int]:
    """The q^l coefficients of the x-expansion of Q_k(x,q)."""
    _check(ell, order)
    gid = make_id('Q') if k == 1 else make_id('Qk', k=k)
    return [c.coeff(ell) for c in coefficient_stream(gid, order)]


def l_closed_form(ell: int) -> RationalGF:
    """Closed forms of L_0 .. L_3."""
    one_minus_x = BiPoly.from_x_coeffs([1, -1])
    forms = {
        0: (BiPoly.from_x_coeffs([0, 1]), one_minus_x),
        1: (BiPoly.from_x_coeffs([0, 0, 0, -1]), one_minus_x ** 2),
        2: (BiPoly.from_x_coeffs([0, 0, 0, 1, -1, 1]), one_minus_x ** 3),
        3: (BiPoly.from_x_coeffs([0, 0, 0, 0, 0, -2, 2, -1]), one_minus_x ** 4),
    }
    if ell not in forms:
        raise DomainError(f"Closed forms exist for l <= 3 only, got l={ell}")
    numerator, denominator = forms[ell]
    return RationalGF(numerator, denominator, f"L_{ell}")


def l_closed_form_series(ell: int, order: int) -> List[int]:
    return integer_series(l_closed_form(ell), order)


def lowest_degree(coeffs: List[int]) -> int:
    """Index of the first nonzero coefficient, -1 when the prefix is all zero."""
    for i, c in enumerate(coeffs):
        if c:
            return i
    return -1
