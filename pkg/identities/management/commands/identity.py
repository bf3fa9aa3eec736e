"""
Django management command to check identities over parameter boxes
"""
import sys

from django.core.management.base import BaseCommand, CommandError

from core.output import OutputFormat, render_json, render_records_csv, write_report
from core.utils import parse_box
from identities.services import list_identities, sweep, sweep_all

BOX_FLAGS = ('n', 'm', 'k', 't', 'd', 's', 'ell')


class Command(BaseCommand):
    help = 'Sweep registered identities over parameter boxes with exact arithmetic'

    def add_arguments(self, parser):
        parser.add_argument(
            'identity',
            type=str,
            nargs='?',
            help="Identity id, or 'all' for the whole catalog over default boxes"
        )
        parser.add_argument('--list', action='store_true', help='List the identity catalog')
        for name in BOX_FLAGS:
            parser.add_argument(f'--{name}', type=str, help=f'Range for {name}, e.g. 1..30 or 7')
        parser.add_argument('--workers', type=int, help='Worker threads (default: SWEEP_WORKERS)')
        parser.add_argument('--unsafe-domain', action='store_true',
                            help='Also evaluate tuples outside the stated domain; results are exploratory')
        parser.add_argument('--output', type=str, help='Also write the reports to a .json or .csv file')
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
        if not options['identity']:
            raise CommandError("Give an identity id or 'all'", returncode=2)

        box_specs = {name: options[name] for name in BOX_FLAGS}
        reports = []
        try:
            box = parse_box(box_specs)
            if options['identity'] == 'all':
                if box:
                    raise CommandError("Box flags cannot be combined with 'all'", returncode=2)
                runs = sweep_all(workers=options['workers'], unsafe_domain=options['unsafe_domain'])
            else:
                runs = [sweep(options['identity'], box=box, workers=options['workers'],
                              unsafe_domain=options['unsafe_domain'])]
            for report in runs:
                reports.append(report)
                if fmt == OutputFormat.PLAIN:
                    # one line per identity as soon as it finishes
                    self.stdout.write(self._line(report))
        except ValueError as e:
            raise CommandError(str(e), returncode=2)

        records = [report.model_dump(mode='json') for report in reports]
        if fmt == OutputFormat.JSON:
            self.stdout.write(render_json(records), ending='')
        elif fmt == OutputFormat.CSV:
            self.stdout.write(render_records_csv(records), ending='')

        if options['output']:
            try:
                write_report(options['output'], records)
            except ValueError as e:
                raise CommandError(str(e), returncode=2)

        if fmt == OutputFormat.PLAIN and len(reports) > 1:
            failed = [r.id for r in reports if not r.verified]
            self.stdout.write(f"{len(reports) - len(failed)}/{len(reports)} identities verified"
                              + (f"; failing: {', '.join(failed)}" if failed else ''))

        if not all(report.verified for report in reports):
            sys.exit(1)

    def _line(self, report):
        status = self.style.SUCCESS('verified') if report.verified else self.style.ERROR('FAIL')
        box = ' '.join(f"{name}={low}..{high}" for name, (low, high) in report.box.items())
        text = (f"{report.id}: {status} {box} checked {report.checked}, skipped {report.skipped}, "
                f"{report.millis} ms")
        if report.exploratory:
            text += ' (exploratory)'
        if report.failures:
            first = report.failures[0]
            detail = first.error or f"{first.lhs} != {first.rhs}"
            text += f"; {len(report.failures)} failure(s), first at {first.params}: {detail}"
        return text

    def _list(self, fmt):
        rows = [summary.model_dump(mode='json') for summary in list_identities()]
        if fmt == OutputFormat.JSON:
            self.stdout.write(render_json(rows), ending='')
        elif fmt == OutputFormat.CSV:
            self.stdout.write(render_records_csv(rows), ending='')
        else:
            for row in rows:
                self.stdout.write(f"{row['id']:<16} {row['domain']:<32} {row['anchor']}")
