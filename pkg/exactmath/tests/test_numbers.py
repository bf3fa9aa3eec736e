"""
Tests for the exact integer helpers.
"""
from sympy import binomial as sym_binomial
from sympy import fibonacci as sym_fibonacci

from core.exceptions import DomainError
from exactmath.numbers import binomial, catalan_closed_form, exact_div, fibonacci, jacobsthal, pell
from test_config import CatalanTestCase, TestDataFactory


class BinomialTestCase(CatalanTestCase):
    """Test cases for the binomial coefficient."""

    def test_worked_examples(self):
        """Test the worked binomials and the out-of-range convention."""
        self.assertEqual(binomial(7, 3), 35)
        self.assertEqual(binomial(8, 3), 56)
        self.assertEqual(binomial(5, -1), 0)
        self.assertEqual(binomial(5, 6), 0)

    def test_pascal_rule(self):
        """Test Pascal's rule for 0 <= k <= n <= 200."""
        for n in range(1, 201):
            for k in range(n + 1):
                self.assertEqual(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1))

    def test_sympy_oracle(self):
        """Test against sympy on a sample of rows."""
        for n in (0, 1, 17, 60, 200):
            for k in range(0, n + 1, 7):
                self.assertEqual(binomial(n, k), int(sym_binomial(n, k)))

    def test_negative_top_rejected(self):
        """Test that n < 0 is a domain error."""
        with self.assertRaises(DomainError):
            binomial(-1, 0)


class SequenceHelpersTestCase(CatalanTestCase):
    """Test cases for Fibonacci, Jacobsthal and Pell numbers."""

    def test_fibonacci(self):
        """Test fast-doubling Fibonacci against sympy."""
        for n in range(200):
            self.assertEqual(fibonacci(n), int(sym_fibonacci(n)))

    def test_jacobsthal(self):
        """Test the Jacobsthal closed form against its recurrence."""
        self.assertEqual([jacobsthal(m) for m in range(11)], TestDataFactory.JACOBSTHAL)
        for m in range(2, 60):
            self.assertEqual(jacobsthal(m), jacobsthal(m - 1) + 2 * jacobsthal(m - 2))

    def test_pell(self):
        """Test the first Pell numbers."""
        self.assertEqual([pell(n) for n in range(1, 9)], [1, 2, 5, 12, 29, 70, 169, 408])

    def test_catalan_closed_form(self):
        """Test the factorial closed form on the printed row 7."""
        self.assertEqual([catalan_closed_form(7, k) for k in range(8)], [1, 7, 27, 75, 165, 297, 429, 429])
        self.assertEqual(catalan_closed_form(7, 8), 0)

    def test_exact_div(self):
        """Test that inexact division raises."""
        self.assertEqual(exact_div(10, 5), 2)
        with self.assertRaises(ArithmeticError):
            exact_div(7, 2)
