"""
Django management command to print a member of a polynomial family
"""
from django.core.management.base import BaseCommand, CommandError

from core.output import OutputFormat, render_csv_rows, render_json
from polyfam.families import build_family, family_names
from polyfam.lseries import lk_series

SERIES_FAMILIES = ('l', 'lk')


class Command(BaseCommand):
    help = 'Print a polynomial of a named family, or a prefix of an L series'

    def add_arguments(self, parser):
        parser.add_argument(
            'family',
            type=str,
            choices=family_names() + list(SERIES_FAMILIES),
            help='Family name'
        )
        for flag in ('n', 'k', 'm', 's', 'l'):
            parser.add_argument(f'-{flag}', type=int, dest=flag, help=f'Family parameter {flag}')
        parser.add_argument(
            '--order',
            type=int,
            default=12,
            help='Highest power of x for the L series (default: 12)'
        )
        parser.add_argument(
            '--format',
            type=str,
            default='plain',
            choices=OutputFormat.choices(),
            help='Output format (default: plain)'
        )

    def handle(self, *args, **options):
        family = options['family']
        fmt = OutputFormat(options['format'])
        params = {name: options.get(name) for name in ('n', 'k', 'm', 's', 'l')}
        try:
            if family in SERIES_FAMILIES:
                if params['l'] is None:
                    raise CommandError(f"{family} needs -l", returncode=2)
                k = params['k'] if family == 'lk' else 1
                if k is None:
                    raise CommandError("lk needs -k", returncode=2)
                coeffs = lk_series(k, params['l'], options['order'])
                text = ' '.join(str(c) for c in coeffs) + '\n'
            else:
                poly = build_family(family, **params)
                coeffs = poly.to_list()
                text = poly.render() + '\n'
        except ValueError as e:
            raise CommandError(str(e), returncode=2)

        used = {name: value for name, value in params.items() if value is not None}
        if fmt == OutputFormat.JSON:
            text = render_json({'family': family, 'params': used, 'coeffs': coeffs})
        elif fmt == OutputFormat.CSV:
            text = render_csv_rows([[i, c] for i, c in enumerate(coeffs)], columns=['power', 'coefficient'])
        self.stdout.write(text, ending='')
