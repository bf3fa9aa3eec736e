"""
Registry of the named rational generating functions.

Every entry is a closed form ``numerator / denominator`` in x with
polynomial-in-q coefficients; q stays formal here and is specialised by the
callers. Ids are small frozen values so expansions can be memoized.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from core.exceptions import DomainError, InvalidDenominator, UnknownGenerator
from exactmath.poly import Poly
from exactmath.series import BiPoly, RationalGF, gf_expand

logger = logging.getLogger("genfun.registry")


@dataclass(frozen=True)
class GFId:
    name: str
    t: Optional[int] = None
    k: Optional[int] = None

    def label(self) -> str:
        params = [f"{key}={value}" for key, value in (('k', self.k), ('t', self.t)) if value is not None]
        return f"{self.name}({', '.join(params)})" if params else self.name


def _bp(terms: Dict[Tuple[int, int], int]) -> BiPoly:
    """Shorthand: ``{(x_power, q_power): coefficient}``."""
    return BiPoly.from_terms(terms)


ONE = BiPoly.one()
X = _bp({(1, 0): 1})
ONE_MINUS_X = _bp({(0, 0): 1, (1, 0): -1})
ONE_PLUS_X = _bp({(0, 0): 1, (1, 0): 1})
ONE_MINUS_QX = _bp({(0, 0): 1, (1, 1): -1})
ONE_PLUS_QX = _bp({(0, 0): 1, (1, 1): 1})
# 1 + qx - x^2 and its x -> -x image 1 - qx - x^2
FIB_FACTOR = _bp({(0, 0): 1, (1, 1): 1, (2, 0): -1})
FIB_FACTOR_NEG = _bp({(0, 0): 1, (1, 1): -1, (2, 0): -1})
QX_PLUS_X2 = _bp({(1, 1): 1, (2, 0): 1})


def _one_minus_k_q2x2(k: int) -> BiPoly:
    return _bp({(0, 0): 1, (2, 2): -k})


def _require_t(t: Optional[int], minimum: int) -> int:
    if t is None or t < minimum:
        raise DomainError(f"Column index t must be >= {minimum}, got {t}")
    return t


def _require_k(k: Optional[int]) -> int:
    if k is None or k == 0:
        raise DomainError(f"k must be a nonzero integer, got {k}")
    return k


def _column(gid: GFId) -> RationalGF:
    t = _require_t(gid.t, 0)
    return RationalGF(ONE, ONE_MINUS_X * ONE_PLUS_X ** t, gid.label())


def _companion_column(gid: GFId) -> RationalGF:
    t = _require_t(gid.t, 0)
    return RationalGF(ONE, ONE_PLUS_X * ONE_MINUS_X ** t, gid.label())


def _f(gid: GFId) -> RationalGF:
    return RationalGF(ONE, ONE_MINUS_X * _bp({(0, 0): 1, (1, 0): 1, (2, 0): -1}), gid.label())


def _fq(gid: GFId) -> RationalGF:
    return RationalGF(ONE, ONE_MINUS_QX * FIB_FACTOR, gid.label())


def _fq_shifted(gid: GFId) -> RationalGF:
    # F(x,q) - 1/(1 - qx)
    return RationalGF(_bp({(1, 1): -1, (2, 0): 1}), ONE_MINUS_QX * FIB_FACTOR, gid.label())


def _cfq(gid: GFId) -> RationalGF:
    # F(-x,q) - 1/(1 + qx)
    return RationalGF(QX_PLUS_X2, ONE_PLUS_QX * FIB_FACTOR_NEG, gid.label())


def _q(gid: GFId) -> RationalGF:
    return RationalGF(X, ONE_MINUS_QX * _bp({(0, 0): 1, (1, 1): 1, (1, 0): -1}), gid.label())


def _q_minus(gid: GFId) -> RationalGF:
    return RationalGF(X, ONE_PLUS_QX * _bp({(0, 0): 1, (1, 1): -1, (1, 0): -1}), gid.label())


def _fib_poly(gid: GFId) -> RationalGF:
    return RationalGF(ONE, FIB_FACTOR_NEG, gid.label())


def _qk(gid: GFId) -> RationalGF:
    k = _require_k(gid.k)
    den = _one_minus_k_q2x2(k) * _bp({(0, 0): 1, (1, 1): 1, (1, 0): -1})
    return RationalGF(X * ONE_PLUS_QX, den, gid.label())


def _qk_at_q1(gid: GFId) -> RationalGF:
    k = _require_k(gid.k)
    return RationalGF(X * ONE_PLUS_X, _bp({(0, 0): 1, (2, 0): -k}), gid.label())


def _qk_minus(gid: GFId) -> RationalGF:
    k = _require_k(gid.k)
    den = _one_minus_k_q2x2(k) * _bp({(0, 0): 1, (1, 1): -1, (1, 0): -1})
    return RationalGF(X * ONE_MINUS_QX, den, gid.label())


def _fk(gid: GFId) -> RationalGF:
    k = _require_k(gid.k)
    return RationalGF(ONE_PLUS_QX, _one_minus_k_q2x2(k) * FIB_FACTOR, gid.label())


def _cfk(gid: GFId) -> RationalGF:
    # F_k(-x,q) - (1 - qx)/(1 - k q^2 x^2)
    k = _require_k(gid.k)
    return RationalGF(ONE_MINUS_QX * QX_PLUS_X2, _one_minus_k_q2x2(k) * FIB_FACTOR_NEG, gid.label())


def _ak_column(gid: GFId) -> RationalGF:
    k = _require_k(gid.k)
    t = _require_t(gid.t, 1)
    return RationalGF(ONE, _bp({(0, 0): 1, (2, 0): -k}) * ONE_PLUS_X ** (t - 1), gid.label())


# name -> (builder, parameter names, one-line description)
REGISTRY: Dict[str, Tuple[Callable[[GFId], RationalGF], Tuple[str, ...], str]] = {
    'ColumnGF': (_column, ('t',), '1/((1-x)(1+x)^t): column t of A, read from x^(m-t)'),
    'CompanionColumnGF': (_companion_column, ('t',), '1/((1+x)(1-x)^t): interleaved a_(m,t), b_(m,t)'),
    'F': (_f, (), '1/((1-x)(1+x-x^2)): B_s'),
    'Fq': (_fq, (), 'F(x,q): B_s(q)'),
    'Fq_shifted': (_fq_shifted, (), 'F(x,q) - 1/(1-qx): sum of B~_s(q)(-x)^s'),
    'CFq': (_cfq, (), 'CF(x,q): B~_s(q)'),
    'Q': (_q, (), 'Q(x,q): H_m(q)'),
    'Qminus': (_q_minus, (), 'Q(x,-q): J_m(q)'),
    'FibPolyGF': (_fib_poly, (), '1/(1-qx-x^2): Fibonacci polynomials'),
    'Qk': (_qk, ('k',), 'Q_k(x,q): H_(k,m)(q)'),
    'Qk_at_q1': (_qk_at_q1, ('k',), 'Q_k(x,1)'),
    'Qk_minus': (_qk_minus, ('k',), 'Q_k(x,-q): J_(k,m)(q)'),
    'Fk': (_fk, ('k',), 'F_k(x,q): B_(k,s)(q)'),
    'CFk': (_cfk, ('k',), 'CF_k(x,q): B~_(k,s)(q)'),
    'AkColumnGF': (_ak_column, ('k', 't'), '1/((1-kx^2)(1+x)^(t-1)): column t of A_k'),
}


def gf_names() -> List[str]:
    return list(REGISTRY)


def make_id(name: str, t: Optional[int] = None, k: Optional[int] = None) -> GFId:
    """
    Build an id, keeping only the parameters the entry takes.

    Raises:
        UnknownGenerator: If ``name`` is not registered
        DomainError: If a required parameter is missing
    """
    if name not in REGISTRY:
        raise UnknownGenerator(f"Unknown generating function '{name}', expected one of {', '.join(REGISTRY)}")
    params = REGISTRY[name][1]
    if 't' in params and t is None:
        raise DomainError(f"{name} needs t")
    if 'k' in params and k is None:
        raise DomainError(f"{name} needs k")
    return GFId(name, t if 't' in params else None, k if 'k' in params else None)


@lru_cache(maxsize=256)
def build_gf(gid: GFId) -> RationalGF:
    """Closed form for ``gid``; denominators always start with 1."""
    if gid.name not in REGISTRY:
        raise UnknownGenerator(f"Unknown generating function '{gid.name}'")
    builder = REGISTRY[gid.name][0]
    return builder(gid)


@lru_cache(maxsize=512)
def _stream(gid: GFId, order: int) -> Tuple[Poly, ...]:
    return tuple(gf_expand(build_gf(gid), order))


def coefficient_stream(gid: GFId, order: int) -> List[Poly]:
    """
    x-coefficients of ``gid`` up to ``x**order``.
    """
    if order < 0:
        raise DomainError(f"Expansion order must be non-negative, got {order}")
    try:
        return list(_stream(gid, order))
    except InvalidDenominator:
        logger.error(f"Registry entry {gid.label()} has an invalid denominator")
        raise
