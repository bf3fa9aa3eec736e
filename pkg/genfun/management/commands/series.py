"""
Django management command to expand a registered generating function
"""
from django.core.management.base import BaseCommand, CommandError

from core.output import OutputFormat, render_csv_rows, render_json
from genfun.registry import build_gf, coefficient_stream, gf_names, make_id


class Command(BaseCommand):
    help = 'Expand a named generating function as a power series in x'

    def add_arguments(self, parser):
        parser.add_argument(
            'name',
            type=str,
            choices=gf_names(),
            help='Registry entry'
        )
        parser.add_argument('-t', type=int, dest='t', help='Column index for column generating functions')
        parser.add_argument('-k', type=int, dest='k', help='k-analogue parameter (nonzero)')
        parser.add_argument(
            '--order',
            type=int,
            default=10,
            help='Highest power of x (default: 10)'
        )
        parser.add_argument(
            '--format',
            type=str,
            default='plain',
            choices=OutputFormat.choices(),
            help='Output format (default: plain)'
        )
        parser.add_argument(
            '--json',
            action='store_true',
            help='Shortcut for --format json'
        )

    def handle(self, *args, **options):
        fmt = OutputFormat.JSON if options['json'] else OutputFormat(options['format'])
        try:
            gid = make_id(options['name'], t=options.get('t'), k=options.get('k'))
            coeffs = coefficient_stream(gid, options['order'])
            gf = build_gf(gid)
        except ValueError as e:
            raise CommandError(str(e), returncode=2)

        if fmt == OutputFormat.JSON:
            text = render_json({
                'id': gid.label(),
                'gf': gf.render(),
                'order': options['order'],
                'coeffs': [c.to_list() for c in coeffs],
            })
        elif fmt == OutputFormat.CSV:
            text = render_csv_rows([[i, c.render()] for i, c in enumerate(coeffs)], columns=['power', 'coefficient'])
        else:
            lines = [f"{gid.label()} = {gf.render()}"]
            lines += [f"x^{i}: {c.render()}" for i, c in enumerate(coeffs)]
            text = '\n'.join(lines) + '\n'
        self.stdout.write(text, ending='')
