"""Command-line interface: ``adjcut <command> <file> [options]``.

Commands
--------
optimal       optimal minimum cost adjustment set
min-card      most efficient adjustment set of minimum cardinality
validate      check a given set (``--set X,T,R``)
compare       order two sets by efficiency (``--sets X,T,R X,Q,R``)
oracle        enumerate every separator of a small H1, from a file or a random instance
dump-h1       H1 as a table, or GML with ``--gml``
dump-network  the flow network as GML

Exit status is 0 whenever a question was answered, including "no adjustment
set exists" and "invalid", and 1 when the input could not be used.
"""

import sys
import json
import logging
import argparse

from .errors import AdjcutError
from .efficiency import build_h1, h1_to_frame
from .flow import SOLVERS, DEFAULT_SOLVER, build_network
from .optimize import optimal_min_cost, optimal_min_cardinality, validate_adjustment, compare_adjustments
from .oracle import enumerate_separators, random_instance
from .io import read_problem, serialize_problem, h1_to_gml, network_to_gml
from .utils import parse_set, format_set, format_cost

logger = logging.getLogger(__name__)

RELATIONS = {
    'equivalent': '{0} and {1} are equally efficient',
    'first': '{0} dominates {1}',
    'second': '{1} dominates {0}',
    'incomparable': '{0} and {1} are incomparable',
}


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_optimal(args):
    p = read_problem(args.file)
    solve = optimal_min_cardinality if args.command == 'min-card' else optimal_min_cost
    result = solve(p, solver=args.solver)
    _emit(args, result.to_dict(), str(result))


def cmd_validate(args):
    p = read_problem(args.file)
    report = validate_adjustment(p, parse_set(args.set))
    _emit(args, report.to_dict(), str(report))


def cmd_compare(args):
    p = read_problem(args.file)
    z1, z2 = (parse_set(s) for s in args.sets)
    relation = compare_adjustments(p, z1, z2)
    _emit(args, {'first': sorted(z1), 'second': sorted(z2), 'relation': relation},
          RELATIONS[relation].format(format_set(z1), format_set(z2)))


def cmd_oracle(args):
    if args.file is not None:
        p = read_problem(args.file)
    elif args.seed is not None:
        lo, hi = args.costs
        p = random_instance(args.seed, args.vertices, args.edge_prob, args.hidden_frac, (lo, hi))
    else:
        raise AdjcutError('oracle needs a problem file or --seed')
    catalog = enumerate_separators(build_h1(p))
    if args.json:
        payload = {
            'separators': [sorted(z) for z in catalog.all_separators],
            'minimal': [sorted(z) for z in catalog.minimal],
            'minimum_cost': [sorted(z) for z in catalog.minimum_cost],
            'minimum_cardinality': [sorted(z) for z in catalog.minimum_cardinality],
            'min_cost_value': (None if catalog.min_cost_value is None
                               else format_cost(catalog.min_cost_value)),
        }
        if args.file is None:
            payload['document'] = serialize_problem(p)
        print(json.dumps(payload, indent=2))
        return
    if args.file is None:
        print(serialize_problem(p))
    if not catalog.all_separators:
        print('no separator exists')
        return
    print(catalog.to_frame().to_string(index=False))
    print('minimum cost {0}: {1}'.format(format_cost(catalog.min_cost_value),
                                         ', '.join(format_set(z) for z in catalog.minimum_cost)))


def cmd_dump_h1(args):
    e = build_h1(read_problem(args.file))
    if args.gml:
        sys.stdout.write(h1_to_gml(e))
    elif args.json:
        print(json.dumps({'vertices': sorted(e.h1.vertices), 'edges': e.h1.edge_list()}, indent=2))
    else:
        print(h1_to_frame(e).to_string())


def cmd_dump_network(args):
    sys.stdout.write(network_to_gml(build_network(build_h1(read_problem(args.file)))))


def _costs(text):
    try:
        lo, hi = (int(t) for t in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError('expected LO,HI, got {0!r}'.format(text))
    return lo, hi


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='print machine-readable JSON')
    common.add_argument('--solver', default=DEFAULT_SOLVER, choices=sorted(SOLVERS),
                        help='max-flow solver (default: %(default)s)')
    common.add_argument('-v', '--verbose', action='store_true', help='log debugging detail to stderr')

    parser = argparse.ArgumentParser(prog='adjcut',
                                     description='Optimal minimum cost adjustment sets via minimum cuts.')
    commands = parser.add_subparsers(dest='command', required=True)

    for name, summary in (('optimal', 'optimal minimum cost adjustment set'),
                          ('min-card', 'most efficient adjustment set of minimum cardinality')):
        sub = commands.add_parser(name, parents=[common], help=summary)
        sub.add_argument('file')
        sub.set_defaults(run=cmd_optimal)

    sub = commands.add_parser('validate', parents=[common], help='check a candidate adjustment set')
    sub.add_argument('file')
    sub.add_argument('--set', required=True, metavar='X,T,R')
    sub.set_defaults(run=cmd_validate)

    sub = commands.add_parser('compare', parents=[common], help='compare two adjustment sets')
    sub.add_argument('file')
    sub.add_argument('--sets', required=True, nargs=2, metavar='X,T,R')
    sub.set_defaults(run=cmd_compare)

    sub = commands.add_parser('oracle', parents=[common], help='enumerate separators by brute force')
    sub.add_argument('file', nargs='?')
    sub.add_argument('--seed', type=int)
    sub.add_argument('--vertices', type=int, default=8)
    sub.add_argument('--edge-prob', type=float, default=0.3)
    sub.add_argument('--hidden-frac', type=float, default=0.0)
    sub.add_argument('--costs', type=_costs, default=(1, 5), metavar='LO,HI')
    sub.set_defaults(run=cmd_oracle)

    sub = commands.add_parser('dump-h1', parents=[common], help='print the adjustment efficiency graph')
    sub.add_argument('file')
    sub.add_argument('--gml', action='store_true', help='print GML instead of a table')
    sub.set_defaults(run=cmd_dump_h1)

    sub = commands.add_parser('dump-network', parents=[common], help='print the flow network as GML')
    sub.add_argument('file')
    sub.set_defaults(run=cmd_dump_network)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(levelname)s %(name)s: %(message)s')
    logger.debug('running %s with solver %s', args.command, args.solver)
    logging.captureWarnings(True)
    try:
        args.run(args)
    except (AdjcutError, OSError) as err:
        print('error: {0}'.format(err), file=sys.stderr)
        return 1
    finally:
        logging.captureWarnings(False)
    return 0


if __name__ == '__main__':
    sys.exit(main())
