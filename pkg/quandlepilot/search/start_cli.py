"""Command line entry point

    python -m quandlepilot.search.start_cli verify TABLE [--property ...]
    python -m quandlepilot.search.start_cli construct KIND [options] --out FILE
    python -m quandlepilot.search.start_cli solve-cocycles --quandle FILE
        --group SIG --psi FILE --out FILE
    python -m quandlepilot.search.start_cli search (--k K | --preset NAME)
        [--long-run] [--jobs N] --report FILE
    python -m quandlepilot.search.start_cli isomorphic FILE1 FILE2
    python -m quandlepilot.search.start_cli library --order N

Exit status is 0 on success, 1 when verify finds a failing property or
isomorphic finds none, 2 on bad input.
"""

import os
import sys
import argparse

from ..algebra.groups import AbelianGroup2, EndoMatrix
from ..algebra.quandles import (is_isomorphic, is_latin, is_idempotent,
    is_left_distributive, is_quandle, is_medial)
from ..shared import load_params, logtools, textio
from . import cocycles
from . import constructions
from . import driver
from . import library

PROPERTIES = {
    'latin': is_latin,
    'idempotent': is_idempotent,
    'left_distributive': is_left_distributive,
    'quandle': is_quandle,
    'medial': lambda q: is_medial(q) is True,
}


## Parser
def build_parser():
    parser = argparse.ArgumentParser(
        prog='quandlepilot',
        description="Construct, verify and search latin quandles of order 2^k.")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('verify', help="Check properties of a quandle table")
    p.add_argument('table', type=str, help="Quandle table file")
    p.add_argument('--property', nargs='+', choices=list(PROPERTIES),
        default=list(PROPERTIES), dest='properties',
        help="Properties that must hold (default: all)")

    p = sub.add_parser('construct', help="Build a quandle table")
    p.add_argument('kind', choices=constructions.KINDS)
    p.add_argument('--ring', type=str, default='dot1',
        help="Four-element ring name (dot1, dot2, dot3) or an Onoi ring file")
    p.add_argument('--sigma', type=int, nargs='+', default=None,
        help="1-based permutation for extension-256 and extension-4k")
    p.add_argument('--j', type=int, default=None,
        help="Number of factors for extension-4k and extension-6k")
    p.add_argument('--k', type=int, default=None, help="Exponent for recipe")
    p.add_argument('--group', type=str, default=None,
        help="Group for affine, e.g. Z2^3 or Z4^2")
    p.add_argument('--psi', type=str, default=None,
        help="Matrix file of psi for affine")
    p.add_argument('--psi-class', type=int, default=0,
        help="Class representative used for affine when --psi is absent")
    p.add_argument('--left', type=str, default=None, help="Left table for product")
    p.add_argument('--right', type=str, default=None, help="Right table for product")
    p.add_argument('--out', type=str, required=True, help="Output table file")

    p = sub.add_parser('solve-cocycles', help="Generators of Z_LD(F, A, psi)")
    p.add_argument('--quandle', type=str, required=True, help="Base table file F")
    p.add_argument('--group', type=str, required=True, help="Fiber A, e.g. Z2^2")
    p.add_argument('--psi', type=str, required=True, help="Matrix file of psi")
    p.add_argument('--cross-check', action='store_true',
        help="Compare the Howell kernel with the integer-lifting kernel")
    p.add_argument('--out', type=str, required=True, help="Output cocycle file")

    p = sub.add_parser('search', help="Search for non-affine latin quandles of order 2^k")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument('--k', type=int, help="Target exponent")
    which.add_argument('--preset', type=str,
        help="Name of a preset in config/search (without '.json')")
    p.add_argument('--long-run', action='store_true', default=None,
        help="Permit searches that take days")
    p.add_argument('--jobs', type=int, default=None, help="Worker processes")
    p.add_argument('--cross-check', action='store_true', default=None,
        help="Compare Howell and integer-lifting kernels")
    p.add_argument('--report', type=str, required=True, help="Report file")

    p = sub.add_parser('isomorphic', help="Test two tables for isomorphism")
    p.add_argument('table1', type=str)
    p.add_argument('table2', type=str)

    p = sub.add_parser('library', help="Show the latin quandle library of one order")
    p.add_argument('--order', type=int, required=True)

    return parser


## Commands
def cmd_verify(args, params, logger):
    q = textio.read_table(args.table)
    failed = []
    for name in args.properties:
        holds = PROPERTIES[name](q)
        print(f'{name}: {holds}')
        if not holds:
            failed.append(name)
    if 'medial' in args.properties and is_medial(q) is not True:
        print(f'medial_witness: {is_medial(q).witness}')
    if failed:
        logger.info(f'{args.table}: fails {", ".join(failed)}')
        return 1
    return 0

def _ring_arg(text):
    if os.path.isfile(text):
        return textio.read_onoi_ring(text)
    return text

def cmd_construct(args, params, logger):
    kwargs = {'ring': _ring_arg(args.ring), 'sigma': args.sigma, 'j': args.j,
        'k': args.k, 'psi_class': args.psi_class, 'params': params}
    if args.group is not None:
        group = AbelianGroup2.parse(args.group)
        kwargs['group'] = group
        if args.psi is not None:
            kwargs['psi'] = EndoMatrix(group, textio.read_modmatrix(args.psi).entries)
    if args.kind == 'product':
        if args.left is None or args.right is None:
            raise ValueError('product needs --left and --right')
        kwargs['left'] = textio.read_table(args.left)
        kwargs['right'] = textio.read_table(args.right)

    q = constructions.construct(args.kind, **kwargs)
    textio.write_table(args.out, q)
    logger.info(f'wrote {args.kind} of order {q.order} to {args.out}')

    summary = constructions.property_summary(q, params['full_scan_max_order'])
    print(constructions.format_summary(summary))
    return 0

def cmd_solve(args, params, logger):
    F = textio.read_table(args.quandle)
    A = AbelianGroup2.parse(args.group)
    psi = EndoMatrix(A, textio.read_modmatrix(args.psi).entries)

    system = cocycles.assemble(F, A, psi)
    logger.info(repr(system))
    thetas = cocycles.solve_ZLD(system, cross_check=args.cross_check)
    medial = cocycles.nonmedial_generator(thetas, psi) is None

    header = [
        f'base order\t{F.order}',
        f'fiber\t{A}',
        f'unknowns\t{system.n_unknowns}',
        f'rows\t{system.matrix.rows}',
        f'rank\t{system.rank()}',
        f'relations\t{system.n_relations}',
        f'generators\t{len(thetas)}',
        f'all generators satisfy (M)\t{"yes" if medial else "no"}',
    ]
    textio.write_cocycles(args.out, thetas, header)
    print('\n'.join(header))
    return 0

def cmd_search(args, params, logger):
    if args.preset is not None:
        params = load_params.load_search_params(args.preset)
    else:
        params = dict(params, k=args.k, jobs=1, long_run=False,
            cross_check_lifting=False, verify_witnesses=True)
    # Flags given on the command line win over the preset
    for key, value in (('long_run', args.long_run), ('jobs', args.jobs),
        ('cross_check_lifting', args.cross_check)):
        if value is not None:
            params[key] = value

    report = driver.search(params['k'], jobs=params['jobs'],
        long_run=params['long_run'],
        cross_check_lifting=params['cross_check_lifting'],
        verify_witnesses=params['verify_witnesses'], params=params)
    report.write(args.report)
    print(f'k={report.k}: {report.verdict} '
        f'({len(report.records_with_witness)}/{len(report.records)} records with a witness)')
    return 0

def cmd_isomorphic(args, params, logger):
    p = textio.read_table(args.table1)
    q = textio.read_table(args.table2)
    f = is_isomorphic(p, q)
    if f is None:
        print('not isomorphic')
        return 1
    print('isomorphic')
    print(' '.join(str(int(x)) for x in f))
    return 0

def cmd_library(args, params, logger):
    lib = library.build_library(args.order, params)
    print(f'# {lib.order}: {len(lib)} latin quandles')
    if len(lib):
        print(lib.summary().to_string(index=False))
    return 0

COMMANDS = {
    'verify': cmd_verify,
    'construct': cmd_construct,
    'solve-cocycles': cmd_solve,
    'search': cmd_search,
    'isomorphic': cmd_isomorphic,
    'library': cmd_library,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logger = logtools.get_logger('cli')
    try:
        params = load_params.load_defaults()
        logger.setLevel(params['log_level'])
        return COMMANDS[args.command](args, params, logger)
    except (ValueError, IOError) as e:
        logger.error(str(e))
        return 2

if __name__ == '__main__':
    sys.exit(main())
