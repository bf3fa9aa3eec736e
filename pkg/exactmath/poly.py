"""
Dense univariate polynomials with exact integer coefficients.

A ``Poly`` is immutable: ``coeffs[i]`` is the coefficient of ``var**i`` and the
tuple is normalized (no trailing zeros, the zero polynomial is the empty
tuple). The variable name is presentation metadata only; two polynomials with
the same coefficients are equal whatever their variable is called.
"""
import logging
from typing import Iterable, List, Sequence, Tuple

logger = logging.getLogger("exactmath.poly")


class _MinusInfinity:
    """Degree of the zero polynomial. Orders below every integer, supports no arithmetic."""

    __slots__ = ()

    def __repr__(self):
        return "-inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("exactmath.poly.MINUS_INFINITY")

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


MINUS_INFINITY = _MinusInfinity()


def _normalize(coeffs: Iterable[int]) -> Tuple[int, ...]:
    items = list(coeffs)
    while items and items[-1] == 0:
        items.pop()
    return tuple(items)


class Poly:
    """Dense polynomial over the integers."""

    __slots__ = ("_coeffs", "var")

    def __init__(self, coeffs: Iterable[int] = (), var: str = "q"):
        self._coeffs = _normalize(int(c) for c in coeffs)
        self.var = var

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, var: str = "q") -> "Poly":
        return cls((), var)

    @classmethod
    def constant(cls, value: int, var: str = "q") -> "Poly":
        return cls((value,), var)

    @classmethod
    def one(cls, var: str = "q") -> "Poly":
        return cls((1,), var)

    @classmethod
    def monomial(cls, coeff: int, power: int, var: str = "q") -> "Poly":
        if power < 0:
            raise ValueError(f"Monomial power must be non-negative, got {power}")
        return cls([0] * power + [coeff], var)

    @classmethod
    def from_terms(cls, terms: dict, var: str = "q") -> "Poly":
        """Build from ``{power: coefficient}``."""
        if not terms:
            return cls.zero(var)
        size = max(terms) + 1
        coeffs = [0] * size
        for power, coeff in terms.items():
            coeffs[power] += coeff
        return cls(coeffs, var)

    # -- inspection ---------------------------------------------------

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Index of the leading coefficient, ``MINUS_INFINITY`` for the zero polynomial."""
        if not self._coeffs:
            return MINUS_INFINITY
        return len(self._coeffs) - 1

    def low_degree(self):
        """Index of the lowest nonzero coefficient, ``MINUS_INFINITY`` for zero."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def coeff(self, power: int) -> int:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return 0

    def to_list(self) -> List[int]:
        return list(self._coeffs)

    def nonzero_coeffs(self) -> List[int]:
        return [c for c in self._coeffs if c]

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly((other,), self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly((-c for c in self._coeffs), self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly((c * other for c in self._coeffs), self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Poly((), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        result = Poly.one(self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by ``var**k`` (k >= 0)."""
        if k < 0:
            raise ValueError(f"Shift must be non-negative, got {k}")
        if not self._coeffs:
            return self
        return Poly([0] * k + list(self._coeffs), self.var)

    def compose_neg(self) -> "Poly":
        """p(var) -> p(-var)."""
        return Poly((c if i % 2 == 0 else -c for i, c in enumerate(self._coeffs)), self.var)

    def truncate(self, order: int) -> "Poly":
        """Drop every power above ``order``."""
        return Poly(self._coeffs[: order + 1], self.var)

    def abs_coeffs(self) -> "Poly":
        return Poly((abs(c) for c in self._coeffs), self.var)

    def with_var(self, var: str) -> "Poly":
        return Poly(self._coeffs, var)

    def __call__(self, value: int) -> int:
        """Horner evaluation at an integer."""
        result = 0
        for c in reversed(self._coeffs):
            result = result * value + c
        return result

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == _normalize((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    # -- rendering ----------------------------------------------------

    def render(self, var: str = None) -> str:
        """Canonical descending-power text, e.g. ``q^4 - 2*q^3 + 4*q^2 - 3*q + 1``."""
        name = var or self.var
        if not self._coeffs:
            return "0"
        parts = []
        for power in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = name if power == 1 else f"{name}^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({list(self._coeffs)!r}, var={self.var!r})"


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_eval(a: Poly, v: int) -> int:
    return a(v)


def is_weakly_unimodal(values: Sequence[int]) -> bool:
    """True when the sequence rises (non-strictly) and then falls (non-strictly)."""
    i, n = 0, len(values)
    while i + 1 < n and values[i] <= values[i + 1]:
        i += 1
    while i + 1 < n and values[i] >= values[i + 1]:
        i += 1
    return i >= n - 1
