"""
Django management command comparing F~_(n,n)(3) with the stacked directed animal counts
"""
import sys

from django.core.management.base import BaseCommand, CommandError

from core.output import OutputFormat, render_csv_rows, render_json
from oeisdata.services import sigma_comparison


class Command(BaseCommand):
    help = 'Compare F~_(n,n)(3) with sigma_n from the bundled A059714'

    def add_arguments(self, parser):
        parser.add_argument('--rows', type=int, default=12, help='Number of rows n = 0.. (default: 12)')
        parser.add_argument(
            '--format',
            type=str,
            default='plain',
            choices=OutputFormat.choices(),
            help='Output format (default: plain)'
        )

    def handle(self, *args, **options):
        fmt = OutputFormat(options['format'])
        try:
            rows = sigma_comparison(options['rows'])
        except ValueError as e:
            raise CommandError(str(e), returncode=2)
        for row in rows:
            row['match'] = row['value'] == row['sigma']

        if fmt == OutputFormat.JSON:
            self.stdout.write(render_json(rows), ending='')
        elif fmt == OutputFormat.CSV:
            table = [[r['n'], r['value'], r['sigma'], str(r['match']).lower()] for r in rows]
            self.stdout.write(render_csv_rows(table, columns=['n', 'value', 'sigma', 'match']), ending='')
        else:
            width = len(str(max(r['sigma'] for r in rows)))
            for r in rows:
                mark = '=' if r['match'] else '!='
                self.stdout.write(f"n={r['n']:>2}  {r['value']:>{width}} {mark} {r['sigma']:>{width}}")

        if not all(r['match'] for r in rows):
            sys.exit(1)
