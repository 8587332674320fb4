#!/usr/bin/env python3
import argparse
import logging
import sys

from dotenv import load_dotenv

from . import __version__ as version
from . import config
from .bundled import EXAMPLES, reproduce
from .checks import run_checks
from .errors import EXIT_MISMATCH, MilError, TransvectionsPresent
from .invariants import verify_relation
from .problem import ProblemSpec
from .report import Report, derived_flags

logger = logging.getLogger('mil.cli')


def _base_report(problem, command):
    return Report(name=problem.name, field=str(problem.field), n=problem.ring.n, command=command,
                  classification=problem.group.classification.to_dict())


def cmd_classify(problem):
    return _base_report(problem, 'classify')


def cmd_invariants(problem, max_degree):
    report = _base_report(problem, 'invariants')
    action = problem.action
    report.invariant_hilbert = action.invariant_hilbert(max_degree)
    report.generators = [[str(f), d] for f, d in action.algebra_generators_up_to(max_degree)]
    if problem.presentation is not None and problem.invariant_generators is not None:
        report.relations = [{'relation': str(r), 'holds': verify_relation(r, problem.invariant_generators)}
                            for r in problem.presentation.relations]
    return report


def cmd_lc(problem, k_from, k_to):
    report = _base_report(problem, 'lc')
    table = problem.cohomology.hilbert_of_H(k_from, k_to)
    report.strands = list(table.reports)
    report.omega = {j: r for j, r in table.omega.items() if r is not None}
    if problem.group.classification.has_transvection:
        report.notes.append('rank_H suppressed: the group contains transvections')
    try:
        report.a_invariant, report.a_invariant_method = problem.a_invariant()
    except TransvectionsPresent as e:
        logger.info("no a-invariant: %s", e)
    _add_flags(problem, report)
    return report


def cmd_a_invariant(problem, floor=None):
    report = _base_report(problem, 'a-invariant')
    report.a_invariant, report.a_invariant_method = problem.a_invariant(floor)
    _add_flags(problem, report)
    return report


def cmd_verify(problem):
    report = _base_report(problem, 'verify')
    report.checks = run_checks(problem)
    return report


def cmd_reproduce(example_id):
    result = reproduce(example_id)
    report = Report(name=example_id, field='', n=0, command='reproduce',
                    checks={v.label: v.passed for v in result.values})
    report.notes = [str(v) for v in result.values]
    report.notes.append(f"{'PASS' if result.passed else 'FAIL'} with {len(result)} checked values")
    return report


def _add_flags(problem, report):
    c = problem.group.classification
    report.flags = derived_flags(report.a_invariant, problem.ring.n, c.order, problem.field.characteristic)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='store_true',
                        help='Show debug output')
    common.add_argument('--json', type=str, default=None,
                        help='also write the report as JSON to this path')

    parser = argparse.ArgumentParser(description='invariant rings and their top local cohomology over finite fields')
    parser.add_argument('--version', action='version', version=f'%(prog)s {version}')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('classify', parents=[common], help='order, determinants, pseudoreflections and transvections')
    p.add_argument('file')

    p = sub.add_parser('invariants', parents=[common], help='invariant Hilbert function and generators')
    p.add_argument('file')
    p.add_argument('--max-degree', type=int, default=None,
                   help='largest degree to scan (default: the file\'s invariants window, else 3)')

    p = sub.add_parser('lc', parents=[common], help='strands of top local cohomology')
    p.add_argument('file')
    p.add_argument('--from', dest='k_from', type=int, default=None)
    p.add_argument('--to', dest='k_to', type=int, default=None)

    p = sub.add_parser('a-invariant', parents=[common], help='a-invariant of the invariant ring')
    p.add_argument('file')
    p.add_argument('--floor', type=int, default=None,
                   help='lowest degree searched (default -n*|G| - n)')

    p = sub.add_parser('verify', parents=[common], help='run every applicable property check')
    p.add_argument('file')

    p = sub.add_parser('reproduce', parents=[common], help='recompute a bundled example and compare')
    p.add_argument('example_id', choices=sorted(EXAMPLES))
    return parser


def run(args):
    if args.command == 'reproduce':
        return cmd_reproduce(args.example_id)
    problem = ProblemSpec.load(args.file)
    if args.command == 'classify':
        return cmd_classify(problem)
    if args.command == 'invariants':
        return cmd_invariants(problem, args.max_degree or problem.window('invariants', 3))
    if args.command == 'lc':
        n = problem.ring.n
        window = problem.window('lc', [-n - 2, -n])
        k_from = args.k_from if args.k_from is not None else window[0]
        k_to = args.k_to if args.k_to is not None else window[1]
        return cmd_lc(problem, k_from, k_to)
    if args.command == 'a-invariant':
        return cmd_a_invariant(problem, args.floor)
    return cmd_verify(problem)


def main(argv=None):
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        # Setup logging
        logging.basicConfig(level=config.log_level(args.verbose))
        report = run(args)
    except MilError as e:
        if args.verbose:
            logger.exception("%s failed", args.command)
        else:
            logger.error("%s: %s", type(e).__name__, e)
        return e.exit_code

    print(report.to_text())
    if args.json:
        report.write_json(args.json)
        logger.info("wrote %s", args.json)
    if not report.passed:
        logger.error("%s: mismatches found", args.command)
        return EXIT_MISMATCH
    return 0


if __name__ == '__main__':
    sys.exit(main())
