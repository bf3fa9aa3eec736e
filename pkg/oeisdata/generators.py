"""
Term generators built from the toolkit, and the catalog of checks pairing
them with bundled sequences.

A generator maps an index to one exact term. Generators raise ``DomainError``
(a ``ValueError``) outside the indices they are defined on; ``cross_check``
treats that as a mismatch.
"""
import logging
from dataclasses import dataclass
from math import isqrt
from typing import Callable, Dict, List, Optional, Tuple

from core.exceptions import DomainError, UnknownGenerator
from exactmath.numbers import fibonacci
from pathoracle.services import count_dyck_height
from polyfam.families import fib_poly, jk_at_one, modified_catalan_poly
from polyfam.lseries import l_series
from triangles.services import (
    alt_jacobsthal_entry,
    b_k_entry,
    c_entry,
    diagonal_sum,
    k_analog_entry,
)

logger = logging.getLogger("oeisdata.generators")

Generator = Callable[[int], int]


def _at_least(minimum: int, fn: Generator) -> Generator:
    def generator(n: int) -> int:
        if n < minimum:
            raise DomainError(f"Generator defined for indices >= {minimum}, got {n}")
        return fn(n)
    return generator


def _triangle_position(i: int) -> Tuple[int, int]:
    # row m holds flat indices m(m+1)/2 .. m(m+1)/2 + m
    m = (isqrt(8 * i + 1) - 1) // 2
    return m, i - m * (m + 1) // 2


def _row_reading(i: int) -> int:
    m, t = _triangle_position(i)
    return alt_jacobsthal_entry(m, t)


def _reversed_row_reading(i: int) -> int:
    m, t = _triangle_position(i)
    return alt_jacobsthal_entry(m, m - t)


def _jacobsthal_by_rows(m: int) -> int:
    return sum(abs(alt_jacobsthal_entry(m, t)) for t in range(1, m + 1))


def _l2_coefficient(n: int) -> int:
    return l_series(2, n)[n]


GENERATORS: Dict[str, Tuple[Generator, str]] = {
    'fibonacci': (_at_least(0, fibonacci), 'Fib(n)'),
    'jacobsthal-row-abs-sum': (_at_least(0, _jacobsthal_by_rows), 'sum_{t>=1} |A(m,t)|'),
    'pell-fib-poly': (_at_least(0, lambda s: fib_poly(s)(2)), 'Fibonacci polynomial F_s(2)'),
    'c2': (_at_least(0, lambda m: c_entry(m, 2)), 'c_(m,2)'),
    'c3': (_at_least(0, lambda m: c_entry(m, 3)), 'c_(m,3)'),
    'c4': (_at_least(0, lambda m: c_entry(m, 4)), 'c_(m,4)'),
    'c5': (_at_least(0, lambda m: c_entry(m, 5)), 'c_(m,5)'),
    'c6': (_at_least(0, lambda m: c_entry(m, 6)), 'c_(m,6)'),
    'l2-series': (_at_least(0, _l2_coefficient), 'x^n coefficient of L_2(x)'),
    'bs': (_at_least(0, lambda s: diagonal_sum(1, s + 2)), 'B_s, anti-diagonal sums of A'),
    'sigma-conjecture': (_at_least(0, lambda n: modified_catalan_poly(n, n)(3)), 'modified F~_(n,n)(3)'),
    'j2-at-one': (_at_least(1, lambda m: jk_at_one(2, m)), 'J_(2,m)(1)'),
    'b2-col2': (_at_least(2, lambda m: b_k_entry(2, m, 2)), 'B_2(m,2)'),
    'b2-col3-neg': (_at_least(3, lambda m: -b_k_entry(2, m, 3)), '-B_2(m,3)'),
    'a2-neg-diagonal': (_at_least(1, lambda j: -diagonal_sum(2, 2 * j + 1)), '-(sum of A_2 along m+t = 2j+1)'),
    'dyck-height-3': (_at_least(0, lambda s: count_dyck_height(2 * (s + 1), 3)), 'Dyck paths of length 2(s+1), height 3'),
    'am1-col4-abs': (_at_least(4, lambda m: abs(k_analog_entry(-1, m, 4))), '|A_(-1)(m,4)|'),
    'bm1-col2': (_at_least(2, lambda m: b_k_entry(-1, m, 2)), 'B_(-1)(m,2)'),
    'bm1-col3-neg': (_at_least(3, lambda m: -b_k_entry(-1, m, 3)), '-B_(-1)(m,3)'),
    'am1-abs-tail': (_at_least(0, lambda m: sum(abs(k_analog_entry(-1, m, t)) for t in range(2, m + 1))),
                     'sum_{t>=2} |A_(-1)(m,t)|'),
    'alt-jacobsthal-rows': (_at_least(0, _row_reading), 'A(m,t) read by rows'),
    'alt-jacobsthal-reversed-rows': (_at_least(0, _reversed_row_reading), 'A(m,t) read by rows, right to left'),
}


def get_generator(name: str) -> Generator:
    """
    Raises:
        UnknownGenerator: If ``name`` is not registered
    """
    entry = GENERATORS.get(name)
    if entry is None:
        raise UnknownGenerator(f"Unknown term generator '{name}', expected one of {', '.join(GENERATORS)}")
    return entry[0]


def generator_names() -> List[str]:
    return list(GENERATORS)


@dataclass(frozen=True)
class SequenceCheck:
    name: str
    oeis_id: str
    generator: str
    expected_shift: int = 0
    min_terms: int = 12
    note: str = ''


CHECKS: Dict[str, SequenceCheck] = {
    check.name: check for check in (
        SequenceCheck('fibonacci', 'A000045', 'fibonacci', min_terms=20),
        SequenceCheck('jacobsthal', 'A001045', 'jacobsthal-row-abs-sum', min_terms=16,
                      note='absolute row sums of the alternating Jacobsthal triangle'),
        SequenceCheck('pell', 'A000129', 'pell-fib-poly', min_terms=15),
        SequenceCheck('c2', 'A000124', 'c2', min_terms=16),
        SequenceCheck('c3', 'A003600', 'c3'),
        SequenceCheck('c4', 'A223718', 'c4', min_terms=6),
        SequenceCheck('c5', 'A257890', 'c5', min_terms=6),
        SequenceCheck('c6', 'A223659', 'c6', min_terms=6),
        SequenceCheck('l2', 'A000124', 'l2-series', expected_shift=3, min_terms=16,
                      note='L_2(x) starts at x^3'),
        SequenceCheck('bs', 'A119282', 'bs', min_terms=20),
        SequenceCheck('sigma', 'A059714', 'sigma-conjecture', note='stacked directed animals conjecture'),
        SequenceCheck('j2', 'A007179', 'j2-at-one', min_terms=16),
        SequenceCheck('b2-col2', 'A152948', 'b2-col2', min_terms=8,
                      note='the same printed list is also attributed to A002856'),
        SequenceCheck('b2-col3', 'A254875', 'b2-col3-neg', min_terms=6),
        SequenceCheck('a2-diagonal', 'A258109', 'a2-neg-diagonal', expected_shift=-1, min_terms=6,
                      note='diagonal j counts Dyck paths of semilength j + 1'),
        SequenceCheck('dyck-height', 'A258109', 'dyck-height-3', expected_shift=-1, min_terms=6,
                      note='generator is indexed by semilength - 1'),
        SequenceCheck('am1-col4', 'A011848', 'am1-col4-abs', expected_shift=1, min_terms=13,
                      note='printed list indexed by m = n + 1'),
        SequenceCheck('bm1-col2', 'A212342', 'bm1-col2', min_terms=6),
        SequenceCheck('bm1-col3', 'A005581', 'bm1-col3-neg', min_terms=6),
        SequenceCheck('am1-tail', 'A007910', 'am1-abs-tail', min_terms=8),
        SequenceCheck('triangle', 'A220074', 'alt-jacobsthal-rows', min_terms=36,
                      note='reading order of a triangle is ambiguous; see check_triangle_readings'),
    )
}

TRIANGLE_READINGS = ('alt-jacobsthal-rows', 'alt-jacobsthal-reversed-rows')


def get_check(name: str) -> SequenceCheck:
    check: Optional[SequenceCheck] = CHECKS.get(name)
    if check is None:
        raise UnknownGenerator(f"Unknown sequence check '{name}', expected one of {', '.join(CHECKS)}")
    return check
