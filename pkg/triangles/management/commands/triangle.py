"""
Django management command to print a triangle or trapezoid
"""
from django.core.management.base import BaseCommand, CommandError

from core.output import OutputFormat
from triangles.rendering import render_triangle
from triangles.services import TRIANGLE_KINDS


class Command(BaseCommand):
    help = 'Print the first rows of a Catalan / Jacobsthal-type triangle'

    def add_arguments(self, parser):
        parser.add_argument(
            'kind',
            type=str,
            choices=TRIANGLE_KINDS,
            help='Table to print'
        )
        parser.add_argument(
            '--rows',
            type=int,
            default=8,
            help='Number of rows to print, starting at row 0 (default: 8)'
        )
        parser.add_argument(
            '-m',
            type=int,
            dest='m',
            help='Number of complete columns of a Catalan trapezoid'
        )
        parser.add_argument(
            '-k',
            type=int,
            dest='k',
            help='Parameter of the k-analogue (nonzero)'
        )
        parser.add_argument(
            '--format',
            type=str,
            default='plain',
            choices=OutputFormat.choices(),
            help='Output format (default: plain)'
        )

    def handle(self, *args, **options):
        try:
            text = render_triangle(
                options['kind'],
                options['rows'],
                OutputFormat(options['format']),
                m=options.get('m'),
                k=options.get('k'),
            )
        except ValueError as e:
            raise CommandError(str(e), returncode=2)
        self.stdout.write(text, ending='')
