"""
Polynomial families built from triangle rows, each paired where possible
with a second construction from its generating function.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from core.exceptions import DomainError, UnknownFamily
from exactmath.numbers import binomial
from exactmath.poly import Poly
from genfun.registry import coefficient_stream, make_id
from triangles.services import alt_jacobsthal_entry, catalan_entry, k_analog_entry

logger = logging.getLogger("polyfam.families")


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"Need 0 <= k <= n, got n={n}, k={k}")


def _check_k(k: int) -> None:
    if k == 0:
        raise DomainError("k-analogue families need k != 0")


# -- Catalan triangle polynomials --------------------------------------------

def catalan_poly_terms(n: int, k: int) -> Poly:
    """Sum_{s=0..k} C(n,s) x^(k-s) without the k <= n check (entries past n vanish)."""
    return Poly.from_terms({k - s: catalan_entry(n, s) for s in range(k + 1)}, var='x')


def modified_catalan_poly_terms(n: int, k: int) -> Poly:
    """Sum_{s=0..k} C(n+1,s) x^max(k-1-s, 0) without the k <= n check."""
    terms: Dict[int, int] = {}
    for s in range(k + 1):
        power = max(k - 1 - s, 0)
        terms[power] = terms.get(power, 0) + catalan_entry(n + 1, s)
    return Poly.from_terms(terms, var='x')


def catalan_poly(n: int, k: int) -> Poly:
    """
    Catalan triangle polynomial of degree k.

    Args:
        n: Row, n >= 0
        k: Column, 0 <= k <= n

    Returns:
        Poly in x with leading coefficient C(n,0) = 1

    Raises:
        DomainError: Outside 0 <= k <= n
    """
    _check_nk(n, k)
    return catalan_poly_terms(n, k)


def modified_catalan_poly(n: int, k: int) -> Poly:
    """Modified Catalan triangle polynomial; degree k-1 for k >= 1."""
    _check_nk(n, k)
    return modified_catalan_poly_terms(n, k)


# -- q-deformations of the alternating Jacobsthal triangle -------------------

def h_poly(m: int) -> Poly:
    """H_m(q) = sum_{t=1..m} A(m,t) q^(m-t)."""
    if m < 1:
        raise DomainError(f"H_m needs m >= 1, got m={m}")
    return Poly.from_terms({m - t: alt_jacobsthal_entry(m, t) for t in range(1, m + 1)})


def j_poly(m: int) -> Poly:
    """J_m(q) = H_m(-q)."""
    return h_poly(m).compose_neg()


def h_poly_from_series(m: int) -> Poly:
    if m < 1:
        raise DomainError(f"H_m needs m >= 1, got m={m}")
    return coefficient_stream(make_id('Q'), m)[m]


def j_poly_from_series(m: int) -> Poly:
    if m < 1:
        raise DomainError(f"J_m needs m >= 1, got m={m}")
    return coefficient_stream(make_id('Qminus'), m)[m]


def _diagonal_poly(k: int, s: int) -> Poly:
    # entries with m + t = s + 2, t >= 1, weighted by q^(m-t)
    terms = {}
    for t in range(1, (s + 2) // 2 + 1):
        m = s + 2 - t
        terms[m - t] = k_analog_entry(k, m, t)
    return Poly.from_terms(terms)


def bq_poly(s: int) -> Poly:
    """B_s(q): the q-weighted anti-diagonal m + t = s + 2 of A."""
    if s < 0:
        raise DomainError(f"B_s needs s >= 0, got s={s}")
    return _diagonal_poly(1, s)


def bq_tilde_poly(s: int) -> Poly:
    """B~_s(q) = (-1)^s B_s(q) + (-1)^(s+1) q^s."""
    if s < 0:
        raise DomainError(f"B~_s needs s >= 0, got s={s}")
    sign = -1 if s % 2 else 1
    return (bq_poly(s) - Poly.monomial(1, s)) * sign


def bq_tilde_poly_by_rows(s: int) -> Poly:
    """Sum of |A(m,t)| q^(m-t) along the anti-diagonal plus (-1)^(s+1) q^s."""
    if s < 0:
        raise DomainError(f"B~_s needs s >= 0, got s={s}")
    sign = 1 if s % 2 else -1
    return bq_poly(s).abs_coeffs() + Poly.monomial(sign, s)


def bq_tilde_poly_from_series(s: int) -> Poly:
    """x^s coefficient of CF(x,q)."""
    if s < 0:
        raise DomainError(f"B~_s needs s >= 0, got s={s}")
    return coefficient_stream(make_id('CFq'), s)[s]


def fib_poly(s: int) -> Poly:
    """
    Fibonacci polynomial with F_1 = 1, F_2 = q, F_s = q F_(s-1) + F_(s-2).

    1/(1 - qx - x^2) = sum_{s>=1} F_s(q) x^(s-1), so F_s(1) = Fib(s) and
    F_s(2) is the s-th Pell number.
    """
    if s < 0:
        raise DomainError(f"Fibonacci polynomial needs s >= 0, got s={s}")
    if s == 0:
        return Poly.zero()
    return coefficient_stream(make_id('FibPolyGF'), s - 1)[s - 1]


def fib_poly_by_recurrence(s: int) -> Poly:
    if s < 0:
        raise DomainError(f"Fibonacci polynomial needs s >= 0, got s={s}")
    previous, current = Poly.zero(), Poly.one()
    if s == 0:
        return previous
    q = Poly.monomial(1, 1)
    for _ in range(s - 1):
        previous, current = current, q * current + previous
    return current


# -- k-analogues -------------------------------------------------------------

def hk_poly(k: int, m: int) -> Poly:
    """H_(k,m)(q) = sum_{t=1..m} A_k(m,t) q^(m-t)."""
    _check_k(k)
    if m < 1:
        raise DomainError(f"H_(k,m) needs m >= 1, got m={m}")
    return Poly.from_terms({m - t: k_analog_entry(k, m, t) for t in range(1, m + 1)})


def jk_poly(k: int, m: int) -> Poly:
    return hk_poly(k, m).compose_neg()


def jk_at_one(k: int, m: int) -> int:
    """J_(k,m)(1), the k-analogue of the m-th Jacobsthal number."""
    return jk_poly(k, m)(1)


def hk_poly_from_series(k: int, m: int) -> Poly:
    _check_k(k)
    if m < 1:
        raise DomainError(f"H_(k,m) needs m >= 1, got m={m}")
    return coefficient_stream(make_id('Qk', k=k), m)[m]


def jk_poly_from_series(k: int, m: int) -> Poly:
    _check_k(k)
    if m < 1:
        raise DomainError(f"J_(k,m) needs m >= 1, got m={m}")
    return coefficient_stream(make_id('Qk_minus', k=k), m)[m]


def bk_poly(k: int, s: int) -> Poly:
    """B_(k,s)(q) along the anti-diagonal m + t = s + 2 of A_k."""
    _check_k(k)
    if s < 0:
        raise DomainError(f"B_(k,s) needs s >= 0, got s={s}")
    return _diagonal_poly(k, s)


def bk_poly_from_series(k: int, s: int) -> Poly:
    """x^s coefficient of F_k(x,q), the series indexed from s = 0."""
    _check_k(k)
    if s < 0:
        raise DomainError(f"B_(k,s) needs s >= 0, got s={s}")
    return coefficient_stream(make_id('Fk', k=k), s)[s]


def bk_tilde_poly(k: int, s: int) -> Poly:
    """B~_(k,s)(q): the x^s coefficient of CF_k(x,q)."""
    _check_k(k)
    if s < 0:
        raise DomainError(f"B~_(k,s) needs s >= 0, got s={s}")
    return coefficient_stream(make_id('CFk', k=k), s)[s]


def bk_tilde_poly_by_rows(k: int, s: int) -> Poly:
    """(-1)^s (B_(k,s)(q) - k^floor(s/2) q^s)."""
    sign = -1 if s % 2 else 1
    return (bk_poly(k, s) - Poly.monomial(k ** (s // 2), s)) * sign


# -- registry for the ``poly`` command ---------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: Tuple[str, ...]
    builder: Callable[..., Poly]
    description: str


FAMILIES: Dict[str, FamilySpec] = {
    spec.name: spec for spec in (
        FamilySpec('catalan', ('n', 'k'), catalan_poly, 'Catalan triangle polynomial F_(n,k)(x)'),
        FamilySpec('modified-catalan', ('n', 'k'), modified_catalan_poly,
                   'modified Catalan triangle polynomial F~_(n,k)(x)'),
        FamilySpec('h', ('m',), h_poly, 'H_m(q)'),
        FamilySpec('j', ('m',), j_poly, 'J_m(q) = H_m(-q)'),
        FamilySpec('bq', ('s',), bq_poly, 'B_s(q)'),
        FamilySpec('bq-tilde', ('s',), bq_tilde_poly, 'B~_s(q)'),
        FamilySpec('fib', ('s',), fib_poly, 'Fibonacci polynomial F_s(q)'),
        FamilySpec('hk', ('k', 'm'), hk_poly, 'H_(k,m)(q)'),
        FamilySpec('jk', ('k', 'm'), jk_poly, 'J_(k,m)(q)'),
        FamilySpec('bk', ('k', 's'), bk_poly, 'B_(k,s)(q)'),
        FamilySpec('bk-tilde', ('k', 's'), bk_tilde_poly, 'B~_(k,s)(q)'),
    )
}


def build_family(name: str, **params: int) -> Poly:
    """
    Build one member of a named family.

    Raises:
        UnknownFamily: If ``name`` is not registered
        DomainError: If a parameter is missing or out of range
    """
    spec = FAMILIES.get(name)
    if spec is None:
        raise UnknownFamily(f"Unknown polynomial family '{name}', expected one of {', '.join(FAMILIES)}")
    missing = [p for p in spec.params if params.get(p) is None]
    if missing:
        raise DomainError(f"Family '{name}' needs {', '.join('-' + p for p in missing)}")
    args = [params[p] for p in spec.params]
    logger.debug(f"Building {name}{tuple(args)}")
    return spec.builder(*args)


def family_names() -> List[str]:
    return list(FAMILIES)
