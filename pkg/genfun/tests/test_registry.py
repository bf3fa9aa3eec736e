"""
Tests for the generating-function registry.
"""
import json
from io import StringIO

from django.core.management import call_command

from core.exceptions import DomainError, UnknownGenerator
from exactmath.numbers import fibonacci
from exactmath.poly import Poly
from exactmath.series import BiPoly, RationalGF, gf_expand, series_times
from genfun.registry import REGISTRY, build_gf, coefficient_stream, make_id
from polyfam.families import h_poly, j_poly
from test_config import CatalanTestCase
from triangles.services import alt_jacobsthal_entry, k_analog_entry


def all_ids():
    ids = []
    for name, (_, params, _) in REGISTRY.items():
        if params == ():
            ids.append(make_id(name))
        elif params == ('t',):
            ids.extend(make_id(name, t=t) for t in range(0, 5))
        elif params == ('k',):
            ids.extend(make_id(name, k=k) for k in (-2, -1, 1, 2, 3))
        else:
            ids.extend(make_id(name, k=k, t=t) for k in (-2, -1, 2, 3) for t in range(1, 5))
    return ids


class RegistryTestCase(CatalanTestCase):
    """Test cases for the registered closed forms."""

    def test_round_trip_every_entry(self):
        """Test denominator times expansion equals numerator mod x^101 for every entry."""
        for gid in all_ids():
            gf = build_gf(gid)
            series = coefficient_stream(gid, 100)
            product = series_times(series, gf.denominator, 100)
            self.assertEqual(product, [gf.numerator.coeff(i) for i in range(101)], gid.label())

    def test_column_gf(self):
        """Test column generating functions against the triangle columns."""
        self.assertEqual([c.coeff(0) for c in coefficient_stream(make_id('ColumnGF', t=2), 8)],
                         [1, -1, 2, -2, 3, -3, 4, -4, 5])
        self.assertEqual([c.coeff(0) for c in coefficient_stream(make_id('ColumnGF', t=3), 5)],
                         [1, -2, 4, -6, 9, -12])
        for t in range(0, 8):
            stream = coefficient_stream(make_id('ColumnGF', t=t), 30)
            for m in range(t, t + 31):
                self.assertEqual(stream[m - t].coeff(0), alt_jacobsthal_entry(m, t))

    def test_ak_column_gf(self):
        """Test the k-analogue column generating functions."""
        for k in (-3, -2, -1, 2, 3):
            for t in range(1, 7):
                stream = coefficient_stream(make_id('AkColumnGF', k=k, t=t), 25)
                for m in range(t, t + 26):
                    self.assertEqual(stream[m - t].coeff(0), k_analog_entry(k, m, t))

    def test_companion_column(self):
        """Test the interleaved a/b companion expansion."""
        self.assertEqual([c.coeff(0) for c in coefficient_stream(make_id('CompanionColumnGF', t=2), 6)],
                         [1, 1, 2, 2, 3, 3, 4])
        for t in range(1, 7):
            stream = coefficient_stream(make_id('CompanionColumnGF', t=t), 30)
            for j in range(31):
                self.assertEqual(stream[j].coeff(0), abs(alt_jacobsthal_entry(t + j, t)))

    def test_f_series(self):
        """Test F(x) against 1 + (-1)^s Fib(s)."""
        stream = coefficient_stream(make_id('F'), 60)
        self.assertEqual([c.coeff(0) for c in stream[:9]], [1, 0, 2, -1, 4, -4, 9, -12, 22])
        for s, c in enumerate(stream):
            self.assertEqual(c.coeff(0), 1 + (-1) ** s * fibonacci(s))

    def test_q_and_q_minus(self):
        """Test that Q and Q(x,-q) give H_m(q) and J_m(q)."""
        q_stream = coefficient_stream(make_id('Q'), 50)
        minus_stream = coefficient_stream(make_id('Qminus'), 50)
        self.assertTrue(q_stream[0].is_zero())
        for m in range(1, 51):
            self.assertPolyEqual(q_stream[m], h_poly(m))
            self.assertPolyEqual(minus_stream[m], j_poly(m))

    def test_qk_at_q1(self):
        """Test Q_k(x,1) = sum k^(m-1)(x^(2m-1) + x^(2m))."""
        for k in (2, 3, -1):
            stream = coefficient_stream(make_id('Qk_at_q1', k=k), 9)
            for m in range(1, 5):
                self.assertEqual(stream[2 * m - 1].coeff(0), k ** (m - 1))
                self.assertEqual(stream[2 * m].coeff(0), k ** (m - 1))

    def test_fib_poly_gf(self):
        """Test the Fibonacci polynomial recurrence on the expansion."""
        stream = coefficient_stream(make_id('FibPolyGF'), 20)
        q = Poly.monomial(1, 1)
        self.assertPolyCoeffs(stream[0], [1])
        self.assertPolyCoeffs(stream[1], [0, 1])
        for s in range(2, 21):
            self.assertPolyEqual(stream[s], q * stream[s - 1] + stream[s - 2])

    def test_cross_multiplied_identities(self):
        """Test the rational identities behind F and Q after cross-multiplication."""
        f = build_gf(make_id('F'))
        fib_factor = BiPoly.from_x_coeffs([1, 1, -1])
        lhs = BiPoly.from_x_coeffs([1, -1]) * BiPoly.from_x_coeffs([0, 0, 1]) * fib_factor
        # (1-x) x^2 F (1+x-x^2) = x^2 once F's denominator cancels
        self.assertEqual(lhs * f.numerator, f.denominator * BiPoly.from_x_coeffs([0, 0, 1]))
        q = build_gf(make_id('Q'))
        factors = BiPoly.from_terms({(0, 0): 1, (1, 1): -1}) * BiPoly.from_terms({(0, 0): 1, (1, 1): 1, (1, 0): -1})
        self.assertEqual(factors, q.denominator)
        self.assertEqual(q.numerator, BiPoly.from_x_coeffs([0, 1]))

    def test_tail_sum_convergence(self):
        """Test that partial column sums reproduce Q(x,q) up to x^T."""
        one_minus_qx = BiPoly.from_terms({(0, 0): 1, (1, 1): -1})
        one_plus_qx = BiPoly.from_terms({(0, 0): 1, (1, 1): 1})
        for T in (1, 5, 12, 30):
            total = [Poly.zero() for _ in range(T + 1)]
            for t in range(1, T + 1):
                term = RationalGF(BiPoly.one().shift(t), one_minus_qx * one_plus_qx ** t)
                total = [a + b for a, b in zip(total, gf_expand(term, T))]
            self.assertEqual(total, coefficient_stream(make_id('Q'), T))

    def test_unknown_and_invalid(self):
        """Test unknown names and invalid parameters."""
        with self.assertRaises(UnknownGenerator):
            make_id('Lucas')
        with self.assertRaises(DomainError):
            build_gf(make_id('Qk', k=0))
        with self.assertRaises(DomainError):
            make_id('ColumnGF')
        with self.assertRaises(DomainError):
            build_gf(make_id('AkColumnGF', k=2, t=0))


class SeriesCommandTestCase(CatalanTestCase):
    """Test cases for the series command."""

    def test_q_json(self):
        """Test that the json coefficients of Q are H_1 .. H_5."""
        out = StringIO()
        call_command('series', 'Q', '--order', '5', '--json', stdout=out)
        payload = json.loads(out.getvalue())
        self.assertEqual(payload['coeffs'][0], [])
        for m in range(1, 6):
            self.assertEqual(payload['coeffs'][m], h_poly(m).to_list())

    def test_plain(self):
        """Test the plain rendering header."""
        out = StringIO()
        call_command('series', 'ColumnGF', '-t', '2', '--order', '3', stdout=out)
        lines = out.getvalue().splitlines()
        self.assertTrue(lines[0].startswith('ColumnGF(t=2) = '))
        self.assertEqual(lines[1:], ['x^0: 1', 'x^1: -1', 'x^2: 2', 'x^3: -2'])
