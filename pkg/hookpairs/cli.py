# -*- coding: utf-8 -*-
#
# Copyright 2023 The hookpairs authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Command line interface.

Result documents go to standard output, diagnostics to standard error.
Exit codes: 0 verified, 1 identity violated, 2 invalid input.
"""
import argparse
import logging as LOG
import os
import sys
import typing

from . import __version__
from .errors import HookPairsError, PreconditionError
from .identities import broken_column_legs, verify_theorem1, \
    verify_theorem2, verify_theorem3
from .partitions import Partition, is_doubled_shifted, make_partition
from .regions import Region, ferrers, hook_pairs, rectangle, \
    render_ascii, s_t_decomposition, split_p, split_q_rect, split_sq, sq, \
    sr, sr_tilde
from .staircase_bijection import Staircase, inverse_master_bijection, \
    left_legs, master_bijection, right_legs, verify_lemma
from .sweep import sweep
from .types import Shape, SubRegion, SweepBounds, Theorem
from .utils import dump_document, format_sequence, parse_partition_literal, \
    parse_sequence_literal, parse_staircase_literal

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INVALID = 2

JOBS_ENV = 'HOOKPAIRS_JOBS'
LOG_LEVEL_ENV = 'HOOKPAIRS_LOG_LEVEL'


def _partition(literal: str) -> Partition:
    return make_partition(parse_partition_literal(literal))


def _staircase(literal: str) -> Staircase:
    return Staircase.build(*parse_staircase_literal(literal))


def _default_jobs() -> int:
    value = os.environ.get(JOBS_ENV, '1')
    try:
        return int(value)
    except ValueError:
        raise PreconditionError(f'Invalid {JOBS_ENV}: {value!r}')


def _add_shape_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--shape', type=Shape, required=True,
                        choices=list(Shape), help='Diagram shape')
    parser.add_argument('--n', type=int, default=0, help='Number of rows')
    parser.add_argument('--k', type=int, default=0,
                        help='Number of columns')
    parser.add_argument('--mu', type=_partition, default=Partition(),
                        help="Partition literal, e.g. '5,2,1'")


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with all subcommands."""
    parser = argparse.ArgumentParser(
        prog='hookpairs',
        description='Construct skew diagrams, compute hook pairs and '
        'verify hook pair identities.')
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    parser.add_argument('--verbose', action='store_true',
                        help='Log debug messages to standard error')
    commands = parser.add_subparsers(dest='command', required=True)

    construct = commands.add_parser('construct', help='Construct a diagram')
    _add_shape_args(construct)
    construct.add_argument('--render', action='store_true',
                           help='Print ASCII grid instead of cell list')

    pairs = commands.add_parser('hook-pairs',
                                help='Hook pairs of a (sub)region')
    _add_shape_args(pairs)
    pairs.add_argument('--sub', type=SubRegion, default=SubRegion.WHOLE,
                       choices=list(SubRegion), help='Subregion')
    pairs.add_argument('--d', type=int, default=None,
                       help='Print broken column legs in distance d')

    bijection = commands.add_parser('bijection',
                                    help='Run the master bijection')
    source = bijection.add_mutually_exclusive_group(required=True)
    source.add_argument('--legs', type=parse_sequence_literal,
                        help="Leg sequence, e.g. '0,1,2,1'")
    source.add_argument('--staircase', type=_staircase,
                        help="Staircase, e.g. 'v:2,1,2;h:1,2'")
    bijection.add_argument('--d', type=int, default=None,
                           help='Distance (with --staircase)')
    bijection.add_argument('--inverse', action='store_true',
                           help='Run the inverse bijection')

    verify = commands.add_parser('verify', help='Verify a theorem instance')
    verify.add_argument('--theorem', type=int, required=True,
                        choices=[int(t) for t in Theorem])
    verify.add_argument('--n', type=int, default=None)
    verify.add_argument('--k', type=int, default=None)
    verify.add_argument('--mu', type=_partition, default=Partition())
    verify.add_argument('--a', type=int, default=None)
    verify.add_argument('--lambda', dest='lam', type=_partition,
                        default=Partition())
    verify.add_argument('--timing', action='store_true',
                        help='Include elapsed time in the report')

    sweep_ = commands.add_parser('sweep', help='Verify a bounded family')
    sweep_.add_argument('--theorem', type=int, required=True,
                        choices=[int(t) for t in Theorem])
    sweep_.add_argument('--max-n', type=int, default=None)
    sweep_.add_argument('--max-k', type=int, default=None)
    sweep_.add_argument('--max-lambda', type=int, default=None)
    sweep_.add_argument('--a-span', type=int, default=0)
    sweep_.add_argument('--jobs', type=int, default=None,
                        help=f'Worker processes (default: ${JOBS_ENV} or 1)')
    sweep_.add_argument('--timing', action='store_true',
                        help='Include elapsed time in the summary')
    return parser


def _region(args: argparse.Namespace) -> Region:
    shape = args.shape
    if shape is Shape.RECT:
        return rectangle(args.n, args.k)
    if shape is Shape.FERRERS:
        return ferrers(args.mu)
    if shape is Shape.SR:
        return sr(args.n, args.k, args.mu)
    if shape is Shape.SR_TILDE:
        return sr_tilde(args.n, args.k, args.mu)
    return sq(args.n, args.k, args.mu)


def _cells_document(region: Region) -> typing.Dict[str, typing.Any]:
    return {
        'cells': [[c.row, c.col] for c in region],
        'size': len(region)
    }


def _subregion(args: argparse.Namespace) -> typing.Tuple[Region, Region]:
    """Return (G, H) for the requested subregion of the shape."""
    shape, sub, mu = args.shape, args.sub, args.mu
    if sub is SubRegion.WHOLE:
        region = _region(args)
        return region, region
    if sub is SubRegion.P and shape is Shape.FERRERS:
        if not is_doubled_shifted(mu):
            raise PreconditionError(
                f'Partition {mu.parts} is not doubled shifted')
        return ferrers(mu), split_p(mu)
    if sub is SubRegion.Q_RECT and shape is Shape.RECT \
            and args.k == args.n + 1:
        return rectangle(args.n, args.k), split_q_rect(args.n)
    if sub in (SubRegion.S1, SubRegion.T1) and shape is Shape.RECT:
        parts = s_t_decomposition(args.n, args.k, mu)
        return rectangle(args.n, args.k), \
            parts.s_1 if sub is SubRegion.S1 else parts.t_1
    if sub in (SubRegion.S2, SubRegion.T2) and shape is Shape.SQ:
        parts = s_t_decomposition(args.n, args.k, mu)
        return sq(args.n, args.k, mu), \
            parts.s_2 if sub is SubRegion.S2 else parts.t_2
    if sub in (SubRegion.Q_A, SubRegion.A2) and shape is Shape.SQ \
            and args.k == args.n + 1:
        split = split_sq(args.n, mu)
        return split.whole, split.q_a if sub is SubRegion.Q_A else split.a_2
    raise PreconditionError(
        f'Subregion {sub} is not defined for shape {shape} '
        f'with n={args.n}, k={args.k}')


def construct_cmd(args: argparse.Namespace) -> int:
    """Print cells of a diagram or render it."""
    region = _region(args)
    if args.render:
        print(render_ascii(region))
    else:
        print(dump_document(_cells_document(region)))
    return EXIT_OK


def hook_pairs_cmd(args: argparse.Namespace) -> int:
    """Print hook pairs of a (sub)region, or legs of a broken column."""
    region, subregion = _subregion(args)
    if args.d is None:
        print(dump_document(hook_pairs(region, subregion).to_document()))
    else:
        print(
            dump_document(
                broken_column_legs(region, subregion, args.d).to_document()))
    return EXIT_OK


def bijection_cmd(args: argparse.Namespace) -> int:
    """Run the master bijection on a leg sequence or a staircase."""
    if args.staircase is None:
        if args.d is not None:
            raise PreconditionError('--d requires --staircase')
        bijection = inverse_master_bijection if args.inverse \
            else master_bijection
        print(format_sequence(bijection(args.legs)))
        return EXIT_OK

    if args.d is None:
        raise PreconditionError('--staircase requires --d')
    staircase = args.staircase
    left = left_legs(staircase, args.d)
    right = right_legs(staircase, args.d)
    output = inverse_master_bijection(right) if args.inverse \
        else master_bijection(left)
    report = verify_lemma(staircase, args.d)
    print(
        dump_document({
            'left': list(left),
            'right': list(right),
            'output': list(output),
            'pass': report.passed
        }))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def verify_cmd(args: argparse.Namespace) -> int:
    """Verify one instance of a theorem."""
    number = Theorem(args.theorem)
    if number is Theorem.HOOK_PAIRS_SHIFTED:
        if args.a is None:
            raise PreconditionError('Theorem 3 requires --a')
        report = verify_theorem3(args.a, args.lam)
    else:
        if args.n is None or args.k is None:
            raise PreconditionError(f'Theorem {number} requires --n and --k')
        verifier = verify_theorem1 if number is Theorem.HOOK_PAIRS_SR \
            else verify_theorem2
        report = verifier(args.n, args.k, args.mu)
    print(report.dumps(include_timing=args.timing))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def sweep_cmd(args: argparse.Namespace) -> int:
    """Verify a theorem over a bounded family."""
    number = Theorem(args.theorem)
    if number is Theorem.HOOK_PAIRS_SHIFTED:
        if args.max_lambda is None:
            raise PreconditionError('Theorem 3 sweep requires --max-lambda')
        bounds = SweepBounds(max_lambda=args.max_lambda, a_span=args.a_span)
    else:
        if args.max_n is None or args.max_k is None:
            raise PreconditionError(
                f'Theorem {number} sweep requires --max-n and --max-k')
        bounds = SweepBounds(max_n=args.max_n, max_k=args.max_k)
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    report = sweep(number, bounds, jobs=jobs)
    LOG.info('Sweep finished in %.1f ms', report.elapsed_ms)
    print(report.dumps(include_timing=args.timing))
    return EXIT_OK if report.passed else EXIT_VIOLATION


COMMANDS: typing.Dict[str, typing.Callable[[argparse.Namespace], int]] = {
    'construct': construct_cmd,
    'hook-pairs': hook_pairs_cmd,
    'bijection': bijection_cmd,
    'verify': verify_cmd,
    'sweep': sweep_cmd
}


def _configure_logging(verbose: bool) -> None:
    level = 'DEBUG' if verbose else \
        os.environ.get(LOG_LEVEL_ENV, 'WARNING').upper()
    # getLevelName maps known names to their numeric level
    if not isinstance(LOG.getLevelName(level), int):
        raise PreconditionError(
            f'Invalid {LOG_LEVEL_ENV}: {os.environ[LOG_LEVEL_ENV]!r}')
    LOG.basicConfig(stream=sys.stderr, level=level,
                    format='%(levelname)s %(name)s: %(message)s')


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """Run command line and return exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        _configure_logging(args.verbose)
        return COMMANDS[args.command](args)
    except HookPairsError as e:
        LOG.debug('Invalid input', exc_info=True)
        print(f'hookpairs: error: {e}', file=sys.stderr)
        return EXIT_INVALID


if __name__ == '__main__':
    sys.exit(main())
