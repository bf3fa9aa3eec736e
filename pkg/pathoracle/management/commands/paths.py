"""
Django management command for the lattice path oracle
"""
import sys

from django.core.management.base import BaseCommand, CommandError

from core.output import OutputFormat, render_csv_rows, render_json
from pathoracle.models import PathConstraint, PathSpec
from pathoracle.services import count_dyck_height, count_paths, dyck_height_profile, verify_bijection


class Command(BaseCommand):
    help = 'Count lattice paths and check the 2^s-to-1 path bijection'

    def add_arguments(self, parser):
        parser.add_argument(
            'action',
            type=str,
            choices=['count', 'bijection', 'dyck-height', 'profile'],
            help='What to compute'
        )
        parser.add_argument('--x', type=int, help='Number of steps (count)')
        parser.add_argument('--y', type=int, default=0, help='Final height (count, default: 0)')
        parser.add_argument(
            '--constraint',
            type=str,
            default=PathConstraint.FREE.value,
            choices=[c.value for c in PathConstraint],
            help='Height constraint (count, default: free)'
        )
        parser.add_argument('--height', type=int, dest='h', help='Height ceiling or exact maximum height')
        parser.add_argument('-n', type=int, dest='n', help='Row n (bijection)')
        parser.add_argument('-k', type=int, dest='k', help='Column k (bijection)')
        parser.add_argument('--length', type=int, help='Dyck path length (dyck-height, profile)')
        parser.add_argument(
            '--format',
            type=str,
            default='plain',
            choices=OutputFormat.choices(),
            help='Output format (default: plain)'
        )

    def handle(self, *args, **options):
        action = options['action']
        fmt = OutputFormat(options['format'])
        try:
            if action == 'bijection':
                self._bijection(options, fmt)
                return
            if action == 'count':
                if options['x'] is None:
                    raise CommandError('count needs --x', returncode=2)
                spec = PathSpec(x=options['x'], y=options['y'],
                                constraint=PathConstraint(options['constraint']), h=options['h'])
                result = {'spec': spec.model_dump(mode='json'), 'count': count_paths(spec)}
            elif action == 'dyck-height':
                if options['length'] is None or options['h'] is None:
                    raise CommandError('dyck-height needs --length and --height', returncode=2)
                result = {'length': options['length'], 'h': options['h'],
                          'count': count_dyck_height(options['length'], options['h'])}
            else:
                if options['length'] is None:
                    raise CommandError('profile needs --length', returncode=2)
                result = {'length': options['length'], 'profile': dyck_height_profile(options['length'])}
        except ValueError as e:
            raise CommandError(str(e), returncode=2)

        if fmt == OutputFormat.JSON:
            self.stdout.write(render_json(result), ending='')
        elif action == 'profile':
            rows = [[h, c] for h, c in result['profile'].items()]
            if fmt == OutputFormat.CSV:
                self.stdout.write(render_csv_rows(rows, columns=['height', 'count']), ending='')
            else:
                for h, c in rows:
                    self.stdout.write(f"height {h}: {c}")
        else:
            self.stdout.write(str(result['count']))

    def _bijection(self, options, fmt):
        if options['n'] is None or options['k'] is None:
            raise CommandError('bijection needs -n and -k', returncode=2)
        report = verify_bijection(options['n'], options['k'])
        if fmt == OutputFormat.JSON:
            self.stdout.write(render_json(report.model_dump(mode='json')), ending='')
        elif fmt == OutputFormat.CSV:
            rows = [[c.s, c.size, c.dyck_count, c.expected] for c in report.per_s]
            self.stdout.write(render_csv_rows(rows, columns=['s', 'size', 'dyck_count', 'expected']), ending='')
        else:
            for c in report.per_s:
                self.stdout.write(f"s={c.s}: {c.size} paths (expected {c.dyck_count} x 2^{c.s} = {c.expected})")
            status = self.style.SUCCESS('holds') if report.holds else self.style.ERROR('FAILS')
            self.stdout.write(f"total {report.lhs} = {report.rhs}: {status}")
        if not report.holds:
            sys.exit(1)
