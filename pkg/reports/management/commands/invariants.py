import logging
import re
from argparse import ArgumentParser

from django.core.management.base import BaseCommand, CommandError, CommandParser
from rest_framework.exceptions import ValidationError

from reports.registry import COMMANDS, build_report
from reports.rendering import render_json, render_text
from reports.serializers import ReportSerializer
from triples.exceptions import DomainError

logger = logging.getLogger(__name__)

TRIPLE_FLAGS = ('n1', 'n2', 'd1', 'd2')
HIGGS_FLAGS = ('p', 'q', 'a', 'b')


class RationalCommandParser(CommandParser):
    """Treats negative rationals such as -1/2 as values, not as option flags."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r'^-\d+(/\d+)?$|^-\d*\.\d+$')


def flag(field):
    return '--' + field.replace('_', '-')


def flatten_errors(detail, field=None):
    """(field, message) pairs from a DRF error tree; list indices keep the enclosing field."""
    if isinstance(detail, dict):
        for key, value in detail.items():
            name = field if isinstance(key, int) or field else key
            yield from flatten_errors(value, name)
    elif isinstance(detail, list):
        for item in detail:
            yield from flatten_errors(item, field)
    else:
        yield field, str(detail)


def describe_errors(detail):
    messages = []
    for field, message in flatten_errors(detail):
        if field in (None, 'non_field_errors'):
            messages.append(message)
        else:
            messages.append(f"{flag(field)}: {message}")
    return '; '.join(messages)


class Command(BaseCommand):
    help = 'Exact invariants of holomorphic triples and U(p,q)-Higgs bundles'

    def add_arguments(self, parser):
        common = ArgumentParser(add_help=False)
        common.add_argument('--g', help='genus (default: MODSPACE DEFAULT_GENUS)')
        common.add_argument('--json', action='store_true', help='emit the report as JSON')

        subcommands = parser.add_subparsers(dest='subcommand', required=True, parser_class=RationalCommandParser)

        def triple_command(name, help_text):
            sub = subcommands.add_parser(name, parents=[common], help=help_text)
            for field in TRIPLE_FLAGS:
                sub.add_argument(flag(field))
            return sub

        def higgs_command(name, help_text):
            sub = subcommands.add_parser(name, parents=[common], help=help_text)
            for field in HIGGS_FLAGS:
                sub.add_argument(flag(field))
            return sub

        triple = triple_command('triple', 'slopes, alpha-range, dimension and witness checks for a triple type')
        triple.add_argument('--alpha', help='stability parameter NUM/DEN')
        triple.add_argument('--witness', nargs=4, action='append', metavar=('N1', 'N2', 'D1', 'D2'))
        triple.add_argument('--strict', action='store_true', default=None, help='check alpha-stability instead of semistability')
        triple.add_argument('--m', help='GCD genericity certificate at integer alpha = m')
        triple.add_argument('--split', nargs=4, metavar=('N1', 'N2', 'D1', 'D2'), help='flip locus dimensions for this split')

        walls = triple_command('walls', 'critical values in an interval')
        walls.add_argument('--interval', nargs=2, metavar=('LO', 'HI'))
        walls.add_argument('--include-endpoints', action='store_true', default=None)
        walls.add_argument('--alpha', help='criticality test at NUM/DEN')
        walls.add_argument('--m', help='genericity certificate at this m')

        chambers = triple_command('chambers', 'chamber decomposition of the alpha-range')
        chambers.add_argument('--cutoff', help='upper end when n1 = n2')

        higgs_command('higgs', 'Toledo invariant, minima triple and Milnor-Wood relations')
        higgs_command('rigidity', 'rigidity decomposition at maximal Toledo invariant')

        morse = subcommands.add_parser('morse', parents=[common], help='Morse bookkeeping at a Hodge chain')
        morse.add_argument('--ranks', nargs='+')
        morse.add_argument('--degrees', nargs='+')

        census = subcommands.add_parser('census', parents=[common], help='fundamental region census of components')
        for field in ('p', 'q', 'a', 'b'):
            census.add_argument(flag(field))

        higgs_command('classify', 'existence, connectedness and smoothness verdicts')

    def handle(self, *args, subcommand, **options):
        query_class, _ = COMMANDS[subcommand]
        data = {name: options[name] for name in query_class().fields if options.get(name) is not None}
        logger.info(f"invariants {subcommand} {data}")
        try:
            report = build_report(subcommand, data)
        except ValidationError as exc:
            raise CommandError(describe_errors(exc.detail), returncode=2)
        except DomainError as exc:
            raise CommandError(f"{exc} [{exc.code}]", returncode=1)

        payload = ReportSerializer(report).data
        self.stdout.write(render_json(payload) if options['json'] else render_text(payload))
