"""
Tests for b-file parsing and serialization.
"""
from core.exceptions import FormatError, GapError
from oeisdata.bfile import parse_bfile, serialize_bfile
from oeisdata.models import Provenance, SequenceRef
from oeisdata.services import bundled_ids, load_bundled
from test_config import CatalanTestCase


class ParseBfileTestCase(CatalanTestCase):
    """Test cases for parse_bfile."""

    def test_minimal_file(self):
        """Test a three-line file."""
        seq = parse_bfile("0 1\n1 1\n2 3")
        self.assertEqual(seq.offset, 0)
        self.assertEqual(seq.terms, [1, 1, 3])
        self.assertEqual(seq.provenance, Provenance.USER)

    def test_comments_and_blank_lines(self):
        """Test that comments and blank lines are skipped and the id is picked up."""
        seq = parse_bfile("# A007179 sample\n\n1 1\n  2 1\n\n3 4\n# trailing\n")
        self.assertEqual(seq.oeis_id, 'A007179')
        self.assertEqual(seq.offset, 1)
        self.assertEqual(seq.terms, [1, 1, 4])
        self.assertEqual(seq.notes, ['A007179 sample', 'trailing'])

    def test_negative_values_and_offset(self):
        """Test signed terms and a negative first index."""
        seq = parse_bfile("-2 5\n-1 -7\n0 0")
        self.assertEqual(seq.offset, -2)
        self.assertEqual(seq.terms, [5, -7, 0])

    def test_big_integers(self):
        """Test that terms keep their exact value."""
        big = 3 ** 200
        self.assertEqual(parse_bfile(f"0 {big}").terms, [big])

    def test_gap(self):
        """Test that a missing index is a gap error."""
        with self.assertRaises(GapError):
            parse_bfile("0 1\n2 3")

    def test_bad_lines(self):
        """Test malformed lines and empty files."""
        for text in ("0 1 2", "0 x", "zero 1", "", "# only a comment\n"):
            with self.assertRaises(FormatError):
                parse_bfile(text)

    def test_empty_sequence_model(self):
        """Test that a SequenceRef needs terms."""
        with self.assertRaises(ValueError):
            SequenceRef(oeis_id='A000045', offset=0, terms=[])


class BundledDataTestCase(CatalanTestCase):
    """Test cases for the bundled snapshots."""

    def test_bundled_ids(self):
        """Test that every cited sequence is bundled."""
        ids = bundled_ids()
        self.assertEqual(len(ids), 19)
        for oeis_id in ('A007179', 'A059714', 'A119282', 'A220074', 'A000045', 'A001045', 'A000129'):
            self.assertIn(oeis_id, ids)

    def test_a007179_prefix(self):
        """Test the printed prefix of A007179."""
        seq = load_bundled('A007179')
        self.assertEqual(seq.terms[:8], [1, 1, 4, 6, 16, 28, 64, 120])
        self.assertEqual(seq.provenance, Provenance.BUNDLED)

    def test_round_trip(self):
        """Test that every bundled sequence re-parses to itself."""
        for oeis_id in bundled_ids():
            seq = load_bundled(oeis_id)
            again = parse_bfile(serialize_bfile(seq), provenance=seq.provenance)
            self.assertEqual(again, seq, oeis_id)

    def test_serialize_adds_id(self):
        """Test that a missing id comment is written."""
        seq = SequenceRef(oeis_id='A000045', offset=0, terms=[0, 1, 1])
        self.assertEqual(serialize_bfile(seq), "# A000045\n0 0\n1 1\n2 1\n")

    def test_transcribed_snapshots(self):
        """Test that snapshots holding only printed terms are marked and carry just those terms."""
        lengths = {'A223718': 6, 'A257890': 6, 'A223659': 6, 'A152948': 8, 'A254875': 6,
                   'A212342': 6, 'A005581': 6, 'A007910': 8, 'A258109': 6}
        for oeis_id, length in lengths.items():
            seq = load_bundled(oeis_id)
            self.assertEqual(seq.provenance, Provenance.TRANSCRIBED, oeis_id)
            self.assertEqual(len(seq.terms), length, oeis_id)
        self.assertEqual(load_bundled('A258109').terms, [0, 1, 5, 18, 57, 169])
        self.assertEqual(load_bundled('A258109').offset, 2)
        self.assertNotIn('A002856', bundled_ids())
