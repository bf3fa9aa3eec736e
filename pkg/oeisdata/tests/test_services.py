"""
Tests for the OEIS cross-checks and the conjecture comparison.
"""
import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError

from core.exceptions import DomainError, UnknownGenerator
from oeisdata.bfile import parse_bfile
from oeisdata.generators import CHECKS, generator_names, get_generator
from oeisdata.models import Provenance
from oeisdata.services import (
    check_triangle_readings,
    cross_check,
    load_bundled,
    run_all_checks,
    run_check,
    sigma_comparison,
)
from test_config import CatalanTestCase, TestDataFactory


class CrossCheckTestCase(CatalanTestCase):
    """Test cases for cross_check."""

    def test_bs_against_a119282(self):
        """Test B_s = 1 + (-1)^s Fib(s) on 20 terms."""
        report = cross_check(load_bundled('A119282'), 'bs', 20)
        self.assertTrue(report.matched)
        self.assertEqual(report.shift, 0)
        self.assertEqual(report.matched_length, 20)
        self.assertIsNone(report.finding)

    def test_sigma_against_a059714(self):
        """Test the conjecture values for n = 0..11."""
        report = cross_check(load_bundled('A059714'), 'sigma-conjecture', 12)
        self.assertTrue(report.matched)
        self.assertEqual(report.matched_length, 12)

    def test_c2_prefix(self):
        """Test c_(m,2) against A000124 on the printed prefix 2,4,7,11,16,22."""
        seq = load_bundled('A000124')
        report = cross_check(seq, 'c2', 16)
        self.assertTrue(report.matched)
        self.assertEqual([get_generator('c2')(m) for m in range(1, 7)], [2, 4, 7, 11, 16, 22])

    def test_shift_is_reported(self):
        """Test that L_2 only matches A000124 after a shift, which is a finding."""
        report = cross_check(load_bundled('A000124'), 'l2-series', 16)
        self.assertTrue(report.matched)
        self.assertEqual(report.shift, 3)
        self.assertEqual(report.aligned_offset, 3)
        self.assertIn('+3', report.finding)

    def test_mismatch_is_reported(self):
        """Test the first mismatch of a wrong pairing."""
        seq = parse_bfile("0 0\n1 1\n2 1\n3 2\n4 3\n5 6")
        report = cross_check(seq, 'fibonacci', 6, window=0)
        self.assertFalse(report.matched)
        self.assertEqual(report.matched_length, 5)
        self.assertEqual(report.first_mismatch.index, 5)
        self.assertEqual(report.first_mismatch.expected, 6)
        self.assertEqual(report.first_mismatch.got, 5)

    def test_longest_prefix_wins_without_match(self):
        """Test that a failed check reports the shift with the longest matching prefix."""
        seq = parse_bfile("0 1\n1 2\n2 3\n3 5\n4 8\n5 14")
        report = cross_check(seq, 'fibonacci', 6)
        self.assertFalse(report.matched)
        self.assertEqual(report.shift, 2)
        self.assertEqual(report.matched_length, 5)

    def test_max_terms_caps_the_comparison(self):
        """Test that only max_terms terms are compared."""
        report = cross_check(load_bundled('A000045'), 'fibonacci', 5)
        self.assertEqual(report.checked_length, 5)

    def test_errors(self):
        """Test unknown generators and a non-positive term count."""
        seq = load_bundled('A000045')
        with self.assertRaises(UnknownGenerator):
            cross_check(seq, 'no-such-generator', 5)
        with self.assertRaises(DomainError):
            cross_check(seq, 'fibonacci', 0)
        with self.assertRaises(DomainError):
            load_bundled('A999999')


class CatalogTestCase(CatalanTestCase):
    """Test cases for the check catalog."""

    def test_every_check_passes(self):
        """Test every catalog check at its expected shift."""
        for name, (report, passed) in run_all_checks().items():
            self.assertTrue(passed, f"{name}: {report.model_dump()}")

    def test_every_generator_is_used(self):
        """Test that the catalog and the reading check cover every generator."""
        used = {check.generator for check in CHECKS.values()}
        used.update(('alt-jacobsthal-reversed-rows',))
        self.assertEqual(used, set(generator_names()))

    def test_findings_only_where_expected(self):
        """Test that shifted alignments carry a finding."""
        for name, check in CHECKS.items():
            report, _ = run_check(name)
            self.assertEqual(report.finding is not None, check.expected_shift != 0, name)

    def test_jacobsthal_generator(self):
        """Test absolute row sums against the Jacobsthal numbers."""
        generator = get_generator('jacobsthal-row-abs-sum')
        self.assertEqual([generator(m) for m in range(11)], TestDataFactory.JACOBSTHAL)

    def test_triangle_readings(self):
        """Test that A220074 matches the row reading, not the reversed one."""
        reports = check_triangle_readings()
        self.assertTrue(reports['alt-jacobsthal-rows'].matched)
        self.assertFalse(reports['alt-jacobsthal-reversed-rows'].matched)
        self.assertEqual(reports['alt-jacobsthal-reversed-rows'].first_mismatch.index, 7)


class ConjectureTestCase(CatalanTestCase):
    """Test cases for the conjecture comparison."""

    def test_twelve_rows(self):
        """Test F~_(n,n)(3) = sigma_n for n = 0..11."""
        rows = sigma_comparison(12)
        self.assertEqual(len(rows), 12)
        for row in rows:
            self.assertEqual(row['value'], row['sigma'])
        self.assertEqual(rows[7]['value'], 15100)
        self.assertEqual([row['value'] for row in rows], TestDataFactory.SIGMA)

    def test_too_many_rows(self):
        """Test that rows past the bundled data are refused."""
        with self.assertRaises(DomainError):
            sigma_comparison(13)


class OeisCommandTestCase(CatalanTestCase):
    """Test cases for the oeis and conjecture commands."""

    def test_single_check_json(self):
        """Test the json report of one catalog check."""
        out = StringIO()
        call_command('oeis', 'j2', '--format', 'json', stdout=out)
        records = json.loads(out.getvalue())
        self.assertEqual(len(records), 1)
        self.assertEqual(records[0]['sequence_id'], 'A007179')
        self.assertTrue(records[0]['passed'])

    def test_all_checks(self):
        """Test that the whole catalog runs clean."""
        out = StringIO()
        call_command('oeis', '--no-color', stdout=out)
        self.assertEqual(len(out.getvalue().splitlines()), len(CHECKS))
        self.assertNotIn('FAIL', out.getvalue())

    def test_user_file(self):
        """Test a user-supplied b-file."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'b000045.txt'
            path.write_text("0 0\n1 1\n2 1\n3 2\n4 3\n", encoding='utf-8')
            out = StringIO()
            call_command('oeis', '--file', str(path), '--generator', 'fibonacci', '--format', 'json', stdout=out)
        records = json.loads(out.getvalue())
        self.assertTrue(records[0]['passed'])

    def test_mismatch_exits_one(self):
        """Test that a failed check exits with status 1."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'bad.txt'
            path.write_text("0 7\n1 7\n", encoding='utf-8')
            with self.assertRaises(SystemExit) as ctx:
                call_command('oeis', '--file', str(path), '--generator', 'fibonacci', stdout=StringIO())
        self.assertEqual(ctx.exception.code, 1)

    def test_unknown_check(self):
        """Test that an unknown check is a usage error."""
        with self.assertRaises(CommandError):
            call_command('oeis', 'nope', stdout=StringIO())

    def test_conjecture(self):
        """Test that the conjecture command prints twelve matching rows."""
        out = StringIO()
        call_command('conjecture', stdout=out)
        lines = out.getvalue().splitlines()
        self.assertEqual(len(lines), 12)
        self.assertTrue(all(' = ' in line for line in lines))
        self.assertIn('15100', lines[7])


class TranscribedDataTestCase(CatalanTestCase):
    """Test cases for checks against transcribed snapshots."""

    def test_min_terms_within_prefix(self):
        """Test that no check asks for more terms than its snapshot holds."""
        for name, check in CHECKS.items():
            self.assertLessEqual(check.min_terms, len(load_bundled(check.oeis_id).terms), name)

    def test_dyck_height_needs_a_shift(self):
        """Test that both A258109 generators align only one index down, with a finding."""
        for name in ('dyck-height', 'a2-diagonal'):
            report, passed = run_check(name)
            self.assertTrue(passed, name)
            self.assertEqual(report.shift, -1, name)
            self.assertEqual(report.aligned_offset, 1, name)
            self.assertIn('-1', report.finding)
            self.assertEqual(report.provenance, Provenance.TRANSCRIBED)

    def test_transcribed_mark_in_plain_output(self):
        """Test that the plain report flags checks run on transcribed terms."""
        out = StringIO()
        call_command('oeis', 'c4', '--no-color', stdout=out)
        self.assertIn('[transcribed]', out.getvalue())
        out = StringIO()
        call_command('oeis', 'bs', '--no-color', stdout=out)
        self.assertNotIn('[transcribed]', out.getvalue())
