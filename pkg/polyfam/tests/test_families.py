"""
Tests for the polynomial families.
"""
from exactmath.numbers import binomial, jacobsthal, pell
from exactmath.poly import Poly, is_weakly_unimodal
from polyfam.families import (
    bk_poly,
    bk_poly_from_series,
    bk_tilde_poly,
    bk_tilde_poly_by_rows,
    bq_poly,
    bq_tilde_poly,
    bq_tilde_poly_by_rows,
    bq_tilde_poly_from_series,
    build_family,
    catalan_poly,
    catalan_poly_terms,
    fib_poly,
    fib_poly_by_recurrence,
    h_poly,
    h_poly_from_series,
    hk_poly,
    hk_poly_from_series,
    j_poly,
    j_poly_from_series,
    jk_at_one,
    jk_poly,
    jk_poly_from_series,
    modified_catalan_poly,
    modified_catalan_poly_terms,
)
from core.exceptions import DomainError, UnknownFamily
from test_config import CatalanTestCase, TestDataFactory
from triangles.services import catalan_entry


class CatalanPolyTestCase(CatalanTestCase):
    """Test cases for the Catalan triangle polynomials."""

    def test_evaluations(self):
        """Test the evaluation lists at 0 and 2."""
        for n in range(21):
            for k in range(n + 1):
                self.assertEqual(catalan_poly(n, k)(0), catalan_entry(n, k))
                self.assertEqual(catalan_poly(n, k)(2), binomial(n + k + 1, k))
                self.assertEqual(catalan_poly(n, k).degree, k)
        self.assertEqual(catalan_poly(3, 3)(2), 35)
        self.assertEqual(catalan_poly(5, 0), Poly.one())

    def test_modified_evaluations(self):
        """Test the modified polynomial at 0, 1 and 3."""
        self.assertEqual(modified_catalan_poly(7, 7)(3), 15100)
        for n in range(21):
            for k in range(n + 1):
                poly = modified_catalan_poly(n, k)
                self.assertEqual(poly(1), catalan_entry(n + 2, k))
                self.assertEqual(poly(0), catalan_entry(n + 1, k - 1) + catalan_entry(n + 1, k))
                if k >= 1:
                    self.assertEqual(poly.degree, k - 1)

    def test_sigma_values(self):
        """Test F~_(n,n)(3) against the twelve listed sigma values."""
        self.assertEqual([modified_catalan_poly(n, n)(3) for n in range(12)], TestDataFactory.SIGMA)

    def test_domain(self):
        """Test that k > n is rejected."""
        with self.assertRaises(DomainError):
            catalan_poly(2, 3)
        with self.assertRaises(DomainError):
            modified_catalan_poly(-1, 0)

    def test_pascal_recurrences(self):
        """Test the Pascal-type recurrences as coefficient identities for 1 <= k <= n <= 40."""
        for n in range(1, 41):
            for k in range(1, n + 1):
                self.assertPolyEqual(
                    catalan_poly(n, k),
                    catalan_poly(n, k - 1) + catalan_poly_terms(n - 1, k),
                )
                self.assertPolyEqual(
                    modified_catalan_poly(n, k),
                    modified_catalan_poly(n, k - 1) + modified_catalan_poly_terms(n - 1, k),
                )

    def test_binomial_identity_all_d(self):
        """Test C(n,k) = d F_(n-1,k)(d) - (d-1) F_(n,k)(d) for d = 1..6."""
        for d in range(1, 7):
            for n in range(1, 32):
                for k in range(n):
                    self.assertEqual(
                        d * catalan_poly(n - 1, k)(d) - (d - 1) * catalan_poly(n, k)(d),
                        catalan_entry(n, k),
                    )

    def test_modified_identity_at_two(self):
        """Test the modified version at d = 2 and its general correction term."""
        for n in range(1, 32):
            for k in range(n):
                self.assertEqual(
                    2 * modified_catalan_poly(n - 1, k)(2) - modified_catalan_poly(n, k)(2),
                    catalan_entry(n, k),
                )
                for d in range(1, 7):
                    self.assertEqual(
                        d * modified_catalan_poly(n - 1, k)(d) - (d - 1) * modified_catalan_poly(n, k)(d),
                        catalan_entry(n, k) + (2 - d) * catalan_entry(n + 1, k - 1),
                    )

    def test_modified_identity_counterexample(self):
        """Test the smallest tuple where the modified version fails away from d = 2."""
        left = 3 * modified_catalan_poly(1, 1)(3) - 2 * modified_catalan_poly(2, 1)(3)
        self.assertEqual(left, 1)
        self.assertEqual(catalan_entry(2, 1), 2)


class QDeformationTestCase(CatalanTestCase):
    """Test cases for H_m, J_m, B_s and B~_s."""

    def test_h5_and_j5(self):
        """Test the printed H_5 and J_3 .. J_5."""
        self.assertEqual(h_poly(5).render(), 'q^4 - 2*q^3 + 4*q^2 - 3*q + 1')
        self.assertEqual(j_poly(5).render(), 'q^4 + 2*q^3 + 4*q^2 + 3*q + 1')
        self.assertPolyCoeffs(j_poly(3), [1, 1, 1])
        self.assertPolyCoeffs(j_poly(4), [1, 2, 2])

    def test_h_values(self):
        """Test H_m(0) = H_m(1) = 1 and H_m(-1) = J_m."""
        for m in range(1, 41):
            self.assertEqual(h_poly(m)(0), 1)
            self.assertEqual(h_poly(m)(1), 1)
            self.assertEqual(h_poly(m)(-1), jacobsthal(m))

    def test_j_coefficients(self):
        """Test that J_m(q) has non-negative coefficients summing to J_m, rising then falling."""
        for m in range(1, 61):
            coeffs = j_poly(m).to_list()
            self.assertTrue(all(c >= 0 for c in coeffs))
            if m <= 50:
                self.assertEqual(sum(coeffs), jacobsthal(m))
            self.assertTrue(is_weakly_unimodal([c for c in coeffs if c]), f"J_{m} not unimodal")

    def test_built_twice(self):
        """Test triangle-built H_m, J_m against the series of Q(x,q) and Q(x,-q)."""
        for m in range(1, 31):
            self.assertPolyEqual(h_poly(m), h_poly_from_series(m))
            self.assertPolyEqual(j_poly(m), j_poly_from_series(m))

    def test_bq_values(self):
        """Test B_s(1) = 1 + (-1)^s Fib(s) on the first terms."""
        self.assertEqual([bq_poly(s)(1) for s in range(9)], [1, 0, 2, -1, 4, -4, 9, -12, 22])
        self.assertPolyCoeffs(bq_poly(3), [0, -1])

    def test_bq_recurrence(self):
        """Test B_(s+1)(q) = -q B_s(q) + B_(s-1)(q) + q^(s+1)."""
        q = Poly.monomial(1, 1)
        for s in range(1, 41):
            self.assertPolyEqual(bq_poly(s + 1), -q * bq_poly(s) + bq_poly(s - 1) + Poly.monomial(1, s + 1))

    def test_bq_tilde_list(self):
        """Test B~_1 .. B~_8 against the printed list."""
        for s, coeffs in enumerate(TestDataFactory.BQ_TILDE, start=1):
            self.assertPolyCoeffs(bq_tilde_poly(s), coeffs)
        self.assertEqual(bq_tilde_poly(8).render(), '4*q^6 + 9*q^4 + 7*q^2 + 1')
        self.assertEqual(bq_tilde_poly(2), Poly.one())

    def test_bq_tilde_definitions_agree(self):
        """Test the signed, row-wise and series definitions of B~_s against each other."""
        for s in range(41):
            self.assertPolyEqual(bq_tilde_poly(s), bq_tilde_poly_by_rows(s))
            self.assertPolyEqual(bq_tilde_poly(s), bq_tilde_poly_from_series(s))

    def test_bq_tilde_parity(self):
        """Test that B~_s has non-negative coefficients on powers of the parity of s only."""
        for s in range(41):
            coeffs = bq_tilde_poly(s).to_list()
            for power, c in enumerate(coeffs):
                self.assertGreaterEqual(c, 0)
                if power % 2 != s % 2:
                    self.assertEqual(c, 0)

    def test_bq_tilde_unimodal(self):
        """Test weak unimodality of the nonzero coefficients of B~_s."""
        for s in range(61):
            self.assertTrue(is_weakly_unimodal(bq_tilde_poly(s).nonzero_coeffs()), f"B~_{s} not unimodal")

    def test_fib_poly(self):
        """Test Fibonacci polynomials at 2 against the Pell numbers."""
        self.assertEqual([fib_poly(s)(2) for s in range(1, 9)], [1, 2, 5, 12, 29, 70, 169, 408])
        for s in range(30):
            self.assertPolyEqual(fib_poly(s), fib_poly_by_recurrence(s))
            self.assertEqual(fib_poly(s)(2), pell(s))


class KAnalogFamilyTestCase(CatalanTestCase):
    """Test cases for the k-analogue families."""

    def test_jk_at_one(self):
        """Test J_(2,m)(1) for m = 1..8."""
        self.assertEqual([jk_at_one(2, m) for m in range(1, 9)], [1, 1, 4, 6, 16, 28, 64, 120])

    def test_hk_at_one(self):
        """Test H_(k,m)(1) = k^floor((m-1)/2)."""
        for k in (-2, -1, 1, 2, 3):
            for m in range(1, 31):
                self.assertEqual(hk_poly(k, m)(1), k ** ((m - 1) // 2))

    def test_k_one_reductions(self):
        """Test that k = 1 gives back the plain families."""
        for m in range(1, 31):
            self.assertPolyEqual(hk_poly(1, m), h_poly(m))
        for s in range(31):
            self.assertPolyEqual(bk_poly(1, s), bq_poly(s))
            self.assertPolyEqual(bk_tilde_poly(1, s), bq_tilde_poly(s))

    def test_built_twice(self):
        """Test triangle-built k-families against their generating functions."""
        for k in (-2, -1, 2, 3):
            for m in range(1, 21):
                self.assertPolyEqual(hk_poly(k, m), hk_poly_from_series(k, m))
                self.assertPolyEqual(jk_poly(k, m), jk_poly_from_series(k, m))
            for s in range(21):
                self.assertPolyEqual(bk_poly(k, s), bk_poly_from_series(k, s))
                self.assertPolyEqual(bk_tilde_poly(k, s), bk_tilde_poly_by_rows(k, s))

    def test_bk2_series_at_one(self):
        """Test B_(2,s)(1) on the first diagonals."""
        self.assertEqual([bk_poly(2, s)(1) for s in range(8)], [1, 0, 3, -1, 8, -5, 21, -18])

    def test_k_zero(self):
        """Test that k = 0 is rejected."""
        with self.assertRaises(DomainError):
            hk_poly(0, 3)


class FamilyRegistryTestCase(CatalanTestCase):
    """Test cases for the named family registry."""

    def test_build_family(self):
        """Test building by name."""
        self.assertPolyEqual(build_family('h', m=5), h_poly(5))
        self.assertPolyEqual(build_family('catalan', n=3, k=2), catalan_poly(3, 2))

    def test_unknown_family(self):
        """Test that an unknown name raises."""
        with self.assertRaises(UnknownFamily):
            build_family('lucas', s=3)

    def test_missing_parameter(self):
        """Test that a missing parameter is a domain error."""
        with self.assertRaises(DomainError):
            build_family('hk', m=3)
