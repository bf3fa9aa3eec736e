"""
Exact integer helpers: binomials and the classical sequences every other
module compares against.
"""
import logging
from functools import lru_cache
from math import comb, factorial

from core.exceptions import DomainError

logger = logging.getLogger("exactmath.numbers")


def binomial(n: int, k: int) -> int:
    """
    Binomial coefficient with the out-of-range convention.

    Args:
        n: Top index, n >= 0.
        k: Bottom index, any integer.

    Returns:
        int: ``n choose k``; 0 when k < 0 or k > n.

    Raises:
        DomainError: If n is negative.
    """
    if n < 0:
        raise DomainError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def catalan_closed_form(n: int, k: int) -> int:
    """(n+k)!(n-k+1) / (k!(n+1)!) for 0 <= k <= n, else 0."""
    if n < 0:
        raise DomainError(f"Catalan triangle rows start at 0, got n={n}")
    if k < 0 or k > n:
        return 0
    numerator = factorial(n + k) * (n - k + 1)
    denominator = factorial(k) * factorial(n + 1)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"Closed form is not integral at ({n}, {k})")
    return quotient


@lru_cache(maxsize=None)
def _fib_pair(n: int):
    # fast doubling: returns (F(n), F(n+1))
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if n & 1:
        return d, c + d
    return c, d


def fibonacci(n: int) -> int:
    """Fib(0) = 0, Fib(1) = 1."""
    if n < 0:
        raise DomainError(f"fibonacci requires n >= 0, got {n}")
    return _fib_pair(n)[0]


def jacobsthal(m: int) -> int:
    """J_0 = 0, J_1 = J_2 = 1, J_m = J_{m-1} + 2 J_{m-2}."""
    if m < 0:
        raise DomainError(f"jacobsthal requires m >= 0, got {m}")
    # closed form (2^m - (-1)^m) / 3
    return (2 ** m - (-1) ** m) // 3


def pell(n: int) -> int:
    """P_0 = 0, P_1 = 1, P_n = 2 P_{n-1} + P_{n-2}."""
    if n < 0:
        raise DomainError(f"pell requires n >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def exact_div(numerator: int, denominator: int) -> int:
    """Integer division that refuses to round."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"{numerator} is not divisible by {denominator}")
    return quotient


def ceil_half(n: int) -> int:
    return -((-n) // 2)


def floor_half(n: int) -> int:
    return n // 2
