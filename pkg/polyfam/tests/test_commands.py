"""
Tests for the ``poly`` management command.
"""
import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError

from test_config import CatalanTestCase


class PolyCommandTestCase(CatalanTestCase):
    """Test cases for the poly command."""

    def run_command(self, *args):
        out = StringIO()
        call_command('poly', *args, stdout=out)
        return out.getvalue()

    def test_h5_plain(self):
        """Test the canonical text of H_5."""
        self.assertEqual(self.run_command('h', '-m', '5'), 'q^4 - 2*q^3 + 4*q^2 - 3*q + 1\n')

    def test_json_coefficients(self):
        """Test json coefficient arrays (index = power)."""
        payload = json.loads(self.run_command('bq-tilde', '-s', '8', '--format', 'json'))
        self.assertEqual(payload['coeffs'], [1, 0, 7, 0, 9, 0, 4])
        self.assertEqual(payload['params'], {'s': 8})

    def test_l_series(self):
        """Test printing an L series prefix."""
        self.assertEqual(self.run_command('l', '-l', '2', '--order', '8'), '0 0 0 1 2 4 7 11 16\n')

    def test_csv(self):
        """Test csv output of a polynomial."""
        lines = self.run_command('j', '-m', '3', '--format', 'csv').splitlines()
        self.assertEqual(lines, ['power,coefficient', '0,1', '1,1', '2,1'])

    def test_missing_parameter(self):
        """Test that a missing parameter is a usage error."""
        with self.assertRaises(CommandError):
            self.run_command('hk', '-m', '3')
