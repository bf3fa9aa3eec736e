"""
Django management command to cross-check generated terms against OEIS b-files
"""
import sys

from django.core.management.base import BaseCommand, CommandError

from core.output import OutputFormat, render_json, render_records_csv
from oeisdata.generators import CHECKS
from oeisdata.models import Provenance
from oeisdata.services import check_triangle_readings, cross_check, load_file, run_all_checks, run_check


class Command(BaseCommand):
    help = 'Cross-check term generators against bundled or user-supplied OEIS b-files'

    def add_arguments(self, parser):
        parser.add_argument(
            'check',
            type=str,
            nargs='?',
            default='all',
            help=f"Catalog check name or 'all' (default: all); one of {', '.join(CHECKS)}"
        )
        parser.add_argument('--list', action='store_true', help='List the catalog checks')
        parser.add_argument('--file', type=str, help='Check a user-supplied b-file instead')
        parser.add_argument('--generator', type=str, help='Generator to use with --file')
        parser.add_argument('--terms', type=int, default=20, help='Terms to compare with --file (default: 20)')
        parser.add_argument('--readings', action='store_true',
                            help='Report which reading order of the triangle matches A220074')
        parser.add_argument(
            '--format',
            type=str,
            default='plain',
            choices=OutputFormat.choices(),
            help='Output format (default: plain)'
        )

    def handle(self, *args, **options):
        fmt = OutputFormat(options['format'])
        if options['list']:
            self._list(fmt)
            return

        try:
            if options['file']:
                if not options['generator']:
                    raise CommandError('--file needs --generator', returncode=2)
                report = cross_check(load_file(options['file']), options['generator'], options['terms'])
                results = {options['file']: (report, report.matched)}
            elif options['readings']:
                reports = check_triangle_readings()
                results = {name: (report, report.matched) for name, report in reports.items()}
            elif options['check'] == 'all':
                results = run_all_checks()
            else:
                results = {options['check']: run_check(options['check'])}
        except ValueError as e:
            raise CommandError(str(e), returncode=2)

        records = []
        for name, (report, passed) in results.items():
            record = report.model_dump(mode='json')
            record['check'] = name
            record['passed'] = passed
            records.append(record)

        if fmt == OutputFormat.JSON:
            self.stdout.write(render_json(records), ending='')
        elif fmt == OutputFormat.CSV:
            self.stdout.write(render_records_csv(records), ending='')
        else:
            for record in records:
                self.stdout.write(self._line(record))

        # several readings may be tried; one matching is enough
        if options['readings']:
            failed = not any(record['passed'] for record in records)
        else:
            failed = not all(record['passed'] for record in records)
        if failed:
            sys.exit(1)

    def _line(self, record):
        status = self.style.SUCCESS('ok') if record['passed'] else self.style.ERROR('FAIL')
        text = (f"{record['check']}: {record['sequence_id']} vs {record['generator']} "
                f"{record['matched_length']}/{record['checked_length']} terms, shift {record['shift']:+d} {status}")
        if record['provenance'] == Provenance.TRANSCRIBED.value:
            text += ' [transcribed]'
        if record['finding']:
            text += f" ({record['finding']})"
        mismatch = record['first_mismatch']
        if mismatch:
            text += f" first mismatch at {mismatch['index']}: expected {mismatch['expected']}, got {mismatch['got']}"
        return text

    def _list(self, fmt):
        rows = [
            {'check': c.name, 'oeis_id': c.oeis_id, 'generator': c.generator,
             'expected_shift': c.expected_shift, 'min_terms': c.min_terms, 'note': c.note}
            for c in CHECKS.values()
        ]
        if fmt == OutputFormat.JSON:
            self.stdout.write(render_json(rows), ending='')
        elif fmt == OutputFormat.CSV:
            self.stdout.write(render_records_csv(rows), ending='')
        else:
            for row in rows:
                self.stdout.write(f"{row['check']:<13} {row['oeis_id']}  {row['generator']}")
