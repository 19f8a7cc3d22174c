from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from math import prod

import config
from HigherPowerSums.ansatz import eq36_reconstruct, tabulated_F, TABULATED
from HigherPowerSums.binomial_sums import enumeration_size
from HigherPowerSums.extra.suites import suites, Conjecture
from HigherPowerSums.extra.tables import quantities, polynomials, oracles, table, render, render_frame
from HigherPowerSums.utils.errors import InstanceTooLarge, InconsistentSystem, InternalInconsistency, SingularSystem
from HigherPowerSums.utils.math import exact_str
from HigherPowerSums.utils.polynomials import Polynomial
from HigherPowerSums.verifier import Verifier, VerificationReport

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILURE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
PARAMETERS = ('m', 'k', 'n', 'r', 'q')

# variable name used for text output of each polynomial family
VARIABLES = {'norlund': 'k', 'stirling': 'k', 'gandhi': 'k', 'p': 'k'}


class UsageError(ValueError):
    pass


def parse_grid(text: str) -> list[int]:
    """
    Parse 'a..b' inclusive ranges and comma lists of integers or ranges, e.g. '1..3,7'.

    :raises UsageError: on malformed input or an empty range
    """
    values = list()
    for part in text.split(','):
        part = part.strip()
        try:
            if '..' in part:
                lo, hi = part.split('..')
                lo, hi = int(lo), int(hi)
                if lo > hi:
                    raise UsageError(f'empty range {part}')
                values += range(lo, hi + 1)
            else:
                values.append(int(part))
        except ValueError as e:
            if isinstance(e, UsageError):
                raise
            raise UsageError(f'bad grid value {part!r}') from e
    return sorted(set(values))


def parse_single(name: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f'--{name} expects a single integer, got {text!r}') from None


def resolve_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    return int(os.environ.get('POWERSUM_CAP', config.enumeration_cap))


def given(args) -> dict[str, str]:
    return {p: getattr(args, p) for p in PARAMETERS if getattr(args, p) is not None}


def single_parameters(args, parameters: tuple) -> dict[str, int]:
    values = given(args)
    extra = [p for p in values if p not in parameters]
    if extra:
        raise UsageError(f'unexpected parameter --{extra[0]}')
    missing = [p for p in parameters if p not in values]
    if missing:
        raise UsageError(f'missing parameter --{missing[0]}')
    return {p: parse_single(p, values[p]) for p in parameters}


def grid_parameters(args, parameters: tuple, defaults: dict | None = None) -> dict[str, list[int]]:
    values = given(args)
    extra = [p for p in values if p not in parameters]
    if extra:
        raise UsageError(f'unexpected parameter --{extra[0]}')
    grid = dict()
    for p in parameters:
        if p in values:
            grid[p] = parse_grid(values[p])
        elif defaults and p in defaults:
            grid[p] = parse_grid(defaults[p])
        else:
            raise UsageError(f'missing parameter --{p}')
    size = prod(len(v) for v in grid.values())
    if size > config.grid_cap:
        raise UsageError(f'grid of {size} points exceeds {config.grid_cap}')
    return grid


def emit(text: str, out: str | None):
    if out:
        with open(out, 'w', newline='') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    parameters, function = quantities[args.quantity]
    point = single_parameters(args, parameters)
    options = {'cap': resolve_cap(args)} if args.quantity == 'multiple-sum' else {}
    value = exact_str(function(*point.values(), **options))

    fmt = args.format or 'text'
    if fmt == 'text':
        emit(value + '\n', args.out)
    else:
        emit(render([{'quantity': args.quantity, **point, 'value': value}], fmt), args.out)
    return EXIT_OK


def cmd_poly(args) -> int:
    parameters, function = polynomials[args.family]
    point = single_parameters(args, parameters)
    result = function(*point.values())

    fmt = args.format or 'json'
    if fmt == 'json':
        payload = result.to_list() if isinstance(result, Polynomial) else result.to_dict()
        emit(json.dumps(payload) + '\n', args.out)
    elif fmt == 'text':
        if isinstance(result, Polynomial):
            emit(result.to_text(VARIABLES.get(args.family, 'z')) + '\n', args.out)
        elif hasattr(result, 'to_text'):
            emit(result.to_text() + '\n', args.out)
        else:
            emit(render(result.rows(), 'text'), args.out)
    else:
        if isinstance(result, Polynomial):
            rows = [{'degree': i, 'coefficient': c} for i, c in enumerate(result.to_list())]
        elif hasattr(result, 'rows'):
            rows = result.rows()
        else:
            rows = [{'exponents': key, 'coefficient': c} for key, c in result.to_dict().items()]
        emit(render(rows, 'csv'), args.out)
    return EXIT_OK


def report_output(report: VerificationReport, args) -> int:
    fmt = args.format or 'text'
    rows = report.rows()
    if fmt == 'json':
        emit(json.dumps(report.to_dict() | {'points': rows}, indent=2) + '\n', args.out)
    elif fmt == 'csv':
        emit(render(rows, 'csv'), args.out)
        print(report.summary(), file=sys.stderr)
    else:
        lines = render(rows, 'text') + report.summary() + '\n'
        for params, lhs, rhs in report.failures:
            lines += f'FAIL {params}: {exact_str(lhs)} != {exact_str(rhs)}\n'
        emit(lines, args.out)
    return EXIT_OK if report.ok else EXIT_FAILURE


def run_suite(suite, grid: dict, args) -> int:
    verifier = Verifier(suite, grid, workers=args.workers)
    if not verifier.points():
        raise UsageError(f'{suite.name}: no grid point satisfies the suite preconditions')
    report = verifier.run(silent=not args.progress)
    return report_output(report, args)


def cmd_verify(args) -> int:
    cls = suites[args.suite]
    grid = grid_parameters(args, cls.parameters, cls.defaults)
    return run_suite(cls(cap=resolve_cap(args), order=args.order), grid, args)


def cmd_conjecture(args) -> int:
    grid = grid_parameters(args, Conjecture.parameters, Conjecture.defaults)
    even = [m for m in grid['m'] if m % 2 == 0]
    if even:
        logger.warning('dropping even m %s, the relation is stated for odd m only', even)
        grid['m'] = [m for m in grid['m'] if m % 2 == 1]
    if not grid['m']:
        raise UsageError('no odd m in the grid')

    cap = resolve_cap(args)
    size = max(enumeration_size(k, n) for k in grid['k'] for n in grid['n'])
    if size > cap:
        raise InstanceTooLarge(size, cap)
    return run_suite(Conjecture(cap=cap), grid, args)


def cmd_table(args) -> int:
    parameters, _ = quantities[args.family]
    grid = grid_parameters(args, parameters)
    options = {'cap': resolve_cap(args)} if args.family == 'multiple-sum' else {}
    frame = table(args.family, grid, **options)
    emit(render_frame(frame, args.format or 'csv'), args.out)
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    r = single_parameters(args, ('r',))['r']
    try:
        f = eq36_reconstruct(r)
    except (InconsistentSystem, SingularSystem) as e:
        print(f'reconstruct r={r}: {e}', file=sys.stderr)
        return EXIT_FAILURE

    rows = f.rows()
    matches = True
    if r in TABULATED:
        expected = tabulated_F(r).ansatz
        for row in rows:
            row['tabulated'] = exact_str(expected.get((row['q'], row['j']), 0))
            row['match'] = row['value'] == row['tabulated']
            matches &= row['match']

    fmt = args.format or 'text'
    if fmt == 'json':
        emit(json.dumps({'r': r, 'verified_up_to': f.verified_up_to, 'coefficients': rows}, indent=2) + '\n', args.out)
    elif fmt == 'csv':
        emit(render(rows, 'csv'), args.out)
    else:
        emit(render(rows, 'text') + f'verified: k = 1..{f.verified_up_to}\n', args.out)
    if not matches:
        print(f'reconstruct r={r}: differs from the tabulated coefficients', file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_oracle(args) -> int:
    parameters, function = oracles[args.family]
    point = single_parameters(args, parameters)
    order = args.order if args.order is not None else config.oracle_order
    values = [exact_str(v) for v in function(*point.values(), order)]

    fmt = args.format or 'json'
    if fmt == 'json':
        emit(json.dumps(values) + '\n', args.out)
    else:
        emit(render([{'index': i, 'value': v} for i, v in enumerate(values)], fmt), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for p in PARAMETERS:
        common.add_argument(f'--{p}', default=None, metavar='GRID', help=f'value or grid (a..b, comma list) for {p}')
    common.add_argument('--format', choices=('json', 'csv', 'text'), default=None)
    common.add_argument('--out', default=None, metavar='FILE', help='write output to FILE instead of stdout')
    common.add_argument('--workers', type=int, default=config.workers)
    common.add_argument('--cap', type=int, default=None, help='enumeration cap (env POWERSUM_CAP)')
    common.add_argument('--order', type=int, default=None, help='series truncation order')
    common.add_argument('--progress', action='store_true', help='progress bar on stderr')
    common.add_argument('-v', '--verbose', action='count', default=0)

    parser = argparse.ArgumentParser(prog='powersums', description='Exact higher-order power sums')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('compute', parents=[common], help='exact scalar value')
    p.add_argument('quantity', choices=sorted(quantities))
    p.set_defaults(handler=cmd_compute)

    p = sub.add_parser('poly', parents=[common], help='exact polynomial')
    p.add_argument('family', choices=sorted(polynomials))
    p.set_defaults(handler=cmd_poly)

    p = sub.add_parser('verify', parents=[common], help='run a verification suite over a grid')
    p.add_argument('suite', choices=sorted(suites))
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('conjecture', parents=[common], help='multiple sum against binomial sum for odd m')
    p.set_defaults(handler=cmd_conjecture)

    p = sub.add_parser('reconstruct', parents=[common], help='fit the ansatz coefficients of F_r(w, k)')
    p.set_defaults(handler=cmd_reconstruct)

    p = sub.add_parser('table', parents=[common], help='table of a scalar family over a grid')
    p.add_argument('family', choices=sorted(quantities))
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser('oracle', parents=[common], help='series oracle coefficients')
    p.add_argument('family', choices=sorted(oracles))
    p.set_defaults(handler=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(stream=sys.stderr, level=level, format='%(levelname)s %(name)s: %(message)s', force=True)

    if args.workers < 1:
        print('error: --workers must be positive', file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args)
    except InstanceTooLarge as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_CAP
    except InternalInconsistency as e:
        print(f'error: internal inconsistency: {e}', file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
