"""
Test configuration and utilities for the catalan-jacobsthal toolkit.

This module provides the shared base test case and the transcribed
reference displays used by several apps' tests.
"""

from pathlib import Path
from typing import Iterable, List, Sequence

from django.test import SimpleTestCase

from exactmath.poly import Poly


class CatalanTestCase(SimpleTestCase):
    """Base test case with assertion helpers for rows and polynomials."""

    def assertRowsEqual(self, actual: Sequence[Sequence[int]], expected: Sequence[Sequence[int]]):
        """Compare tables row by row so a failure names the first bad row."""
        self.assertEqual(len(actual), len(expected), "row count differs")
        for index, (got, want) in enumerate(zip(actual, expected)):
            self.assertEqual(list(got), list(want), f"row {index} differs")

    def assertPolyCoeffs(self, poly: Poly, coeffs: Iterable[int]):
        """Compare a polynomial against its coefficient list (index = power)."""
        self.assertEqual(poly, Poly(coeffs), f"{poly.render()} != {Poly(coeffs).render()}")

    def assertPolyEqual(self, left: Poly, right: Poly):
        self.assertEqual(left, right, f"{left.render()} != {right.render()}")

    def read_golden(self, path: Path) -> str:
        return Path(path).read_text(encoding='utf-8')


class TestDataFactory:
    """Reference values transcribed from the published displays."""

    CATALAN_ROWS: List[List[int]] = [
        [1],
        [1, 1],
        [1, 2, 2],
        [1, 3, 5, 5],
        [1, 4, 9, 14, 14],
        [1, 5, 14, 28, 42, 42],
        [1, 6, 20, 48, 90, 132, 132],
        [1, 7, 27, 75, 165, 297, 429, 429],
    ]

    TRAPEZOID_3_ROWS: List[List[int]] = [
        [1, 1, 1],
        [1, 2, 3, 3],
        [1, 3, 6, 9, 9],
        [1, 4, 10, 19, 28, 28],
        [1, 5, 15, 34, 62, 90, 90],
        [1, 6, 21, 55, 117, 207, 297, 297],
        [1, 7, 28, 83, 200, 407, 704, 1001, 1001],
        [1, 8, 36, 119, 319, 726, 1430, 2431, 3432, 3432],
    ]

    ALT_JACOBSTHAL_ROWS: List[List[int]] = [
        [1],
        [1, 1],
        [1, 0, 1],
        [1, 1, -1, 1],
        [1, 0, 2, -2, 1],
        [1, 1, -2, 4, -3, 1],
        [1, 0, 3, -6, 7, -4, 1],
        [1, 1, -3, 9, -13, 11, -5, 1],
        [1, 0, 4, -12, 22, -24, 16, -6, 1],
    ]

    K2_ROWS: List[List[int]] = [
        [1],
        [1, 1],
        [2, 0, 1],
        [2, 2, -1, 1],
        [4, 0, 3, -2, 1],
        [4, 4, -3, 5, -3, 1],
        [8, 0, 7, -8, 8, -4, 1],
        [8, 8, -7, 15, -16, 12, -5, 1],
        [16, 0, 15, -22, 31, -28, 17, -6, 1],
        [16, 16, -15, 37, -53, 59, -45, 23, -7, 1],
        [32, 0, 31, -52, 90, -112, 104, -68, 30, -8, 1],
    ]

    K_MINUS1_ROWS: List[List[int]] = [
        [1],
        [1, 1],
        [-1, 0, 1],
        [-1, -1, -1, 1],
        [1, 0, 0, -2, 1],
        [1, 1, 0, 2, -3, 1],
        [-1, 0, 1, -2, 5, -4, 1],
        [-1, -1, -1, 3, -7, 9, -5, 1],
        [1, 0, 0, -4, 10, -16, 14, -6, 1],
        [1, 1, 0, 4, -14, 26, -30, 20, -7, 1],
        [-1, 0, 1, -4, 18, -40, 56, -50, 27, -8, 1],
    ]

    # B~_1 .. B~_8 as coefficient lists
    BQ_TILDE: List[List[int]] = [
        [0, 1],
        [1],
        [0, 1, 0, 1],
        [1, 0, 2],
        [0, 2, 0, 2, 0, 1],
        [1, 0, 4, 0, 3],
        [0, 3, 0, 6, 0, 3, 0, 1],
        [1, 0, 7, 0, 9, 0, 4],
    ]

    JACOBSTHAL = [0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341]

    SIGMA = [1, 3, 11, 44, 184, 789, 3435, 15100, 66806, 296870, 1323318, 5911972]

    @staticmethod
    def sequence_text(terms: Sequence[int], offset: int = 0) -> str:
        """b-file text for ``terms`` starting at ``offset``."""
        return '\n'.join(f"{offset + i} {v}" for i, v in enumerate(terms)) + '\n'
