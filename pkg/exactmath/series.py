"""
Polynomials in x with polynomial-in-q coefficients, rational generating
functions built from them, and their exact power-series expansion.
"""
import logging
from typing import Dict, Iterable, List, Sequence, Tuple

from core.exceptions import InvalidDenominator
from exactmath.poly import Poly

logger = logging.getLogger("exactmath.series")


def _trim(polys: Iterable[Poly]) -> Tuple[Poly, ...]:
    items = list(polys)
    while items and items[-1].is_zero():
        items.pop()
    return tuple(items)


class BiPoly:
    """``coeffs[i]`` is the q-polynomial multiplying ``x**i``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Poly] = ()):
        self._coeffs = _trim(c if isinstance(c, Poly) else Poly.constant(c) for c in coeffs)

    @classmethod
    def from_terms(cls, terms: Dict[Tuple[int, int], int]) -> "BiPoly":
        """Build from ``{(x_power, q_power): coefficient}``."""
        if not terms:
            return cls()
        size = max(xp for xp, _ in terms) + 1
        buckets: List[Dict[int, int]] = [dict() for _ in range(size)]
        for (xp, qp), c in terms.items():
            buckets[xp][qp] = buckets[xp].get(qp, 0) + c
        return cls(Poly.from_terms(b) for b in buckets)

    @classmethod
    def from_x_coeffs(cls, coeffs: Sequence[int]) -> "BiPoly":
        """A polynomial in x alone (constant q-coefficients)."""
        return cls(Poly.constant(c) for c in coeffs)

    @classmethod
    def one(cls) -> "BiPoly":
        return cls((Poly.one(),))

    @property
    def coeffs(self) -> Tuple[Poly, ...]:
        return self._coeffs

    def coeff(self, power: int) -> Poly:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Poly.zero()

    @property
    def x_degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "BiPoly") -> "BiPoly":
        size = max(len(self._coeffs), len(other._coeffs))
        return BiPoly(self.coeff(i) + other.coeff(i) for i in range(size))

    def __neg__(self) -> "BiPoly":
        return BiPoly(-c for c in self._coeffs)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if self.is_zero() or other.is_zero():
            return BiPoly()
        out = [Poly.zero() for _ in range(len(self._coeffs) + len(other._coeffs) - 1)]
        for i, a in enumerate(self._coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    def __pow__(self, exponent: int) -> "BiPoly":
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result = BiPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def truncate(self, order: int) -> "BiPoly":
        return BiPoly(self._coeffs[: order + 1])

    def shift(self, k: int) -> "BiPoly":
        """Multiply by ``x**k``."""
        if self.is_zero():
            return self
        return BiPoly([Poly.zero()] * k + list(self._coeffs))

    def substitute_q(self, value: int) -> "BiPoly":
        return BiPoly(Poly.constant(c(value)) for c in self._coeffs)

    def negate_q(self) -> "BiPoly":
        return BiPoly(c.compose_neg() for c in self._coeffs)

    def negate_x(self) -> "BiPoly":
        return BiPoly(c if i % 2 == 0 else -c for i, c in enumerate(self._coeffs))

    def render(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for power, c in enumerate(self._coeffs):
            if c.is_zero():
                continue
            monomial = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
            if not monomial:
                text = f"({c.render()})" if len(c.nonzero_coeffs()) > 1 else c.render()
            elif c == 1:
                text = monomial
            elif c == -1:
                text = f"-{monomial}"
            elif len(c.nonzero_coeffs()) > 1:
                text = f"({c.render()})*{monomial}"
            else:
                text = f"{c.render()}*{monomial}"
            terms.append(text)
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"BiPoly({[c.to_list() for c in self._coeffs]!r})"


class RationalGF:
    """``numerator / denominator`` with the denominator's x^0 coefficient equal to 1."""

    __slots__ = ("numerator", "denominator", "label")

    def __init__(self, numerator: BiPoly, denominator: BiPoly, label: str = ""):
        if denominator.coeff(0) != Poly.one():
            raise InvalidDenominator(
                f"Denominator constant term must be 1, got {denominator.coeff(0).render()}"
            )
        self.numerator = numerator
        self.denominator = denominator
        self.label = label

    def substitute_q(self, value: int) -> "RationalGF":
        return RationalGF(
            self.numerator.substitute_q(value),
            self.denominator.substitute_q(value),
            f"{self.label}|q={value}",
        )

    def negate_q(self) -> "RationalGF":
        return RationalGF(self.numerator.negate_q(), self.denominator.negate_q(), f"{self.label}|q->-q")

    def negate_x(self) -> "RationalGF":
        return RationalGF(self.numerator.negate_x(), self.denominator.negate_x(), f"{self.label}|x->-x")

    def expand(self, order: int) -> List[Poly]:
        return gf_expand(self, order)

    def render(self) -> str:
        return f"({self.numerator.render()}) / ({self.denominator.render()})"

    def __repr__(self):
        return f"RationalGF({self.label or self.render()})"


def gf_expand(g: RationalGF, order: int) -> List[Poly]:
    """
    Expand ``g`` as a power series in x up to ``x**order``.

    The coefficients come from the recurrence ``den * S = num``:
    ``S[n] = num[n] - sum(den[j] * S[n - j] for j = 1..deg(den))``.

    Args:
        g: Generating function; its denominator must start with 1.
        order: Highest power of x to compute (>= 0).

    Returns:
        List[Poly]: ``order + 1`` q-polynomials.

    Raises:
        InvalidDenominator: If the denominator's x^0 coefficient is not 1.
    """
    if order < 0:
        raise ValueError(f"Expansion order must be non-negative, got {order}")
    den = g.denominator
    if den.coeff(0) != Poly.one():
        raise InvalidDenominator(f"Denominator constant term must be 1, got {den.coeff(0).render()}")
    tail = [(j, den.coeff(j)) for j in range(1, den.x_degree + 1) if not den.coeff(j).is_zero()]
    series: List[Poly] = []
    for n in range(order + 1):
        term = g.numerator.coeff(n)
        for j, d in tail:
            if j > n:
                break
            term = term - d * series[n - j]
        series.append(term)
    return series


def integer_series(g: RationalGF, order: int) -> List[int]:
    """Expansion of a generating function whose coefficients are constants in q."""
    result = []
    for c in gf_expand(g, order):
        if not c.is_constant():
            raise ValueError(f"Coefficient {c.render()} of {g.label or g.render()} depends on q")
        result.append(c.coeff(0))
    return result


def series_times(a: Sequence[Poly], b: BiPoly, order: int) -> List[Poly]:
    """Truncated product of a coefficient list with a BiPoly."""
    out = [Poly.zero() for _ in range(order + 1)]
    for i, ca in enumerate(a[: order + 1]):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b.coeffs):
            if i + j > order:
                break
            out[i + j] = out[i + j] + ca * cb
    return out
