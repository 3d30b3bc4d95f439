# -*- coding: utf-8 -*-
# Copyright 2021 The ProxQN Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ============================================================================
"""Command-line interface of the benchmark harness.

Usage:
    proxqn-bench generate --family group-lasso --scale k=4 --seed 1
    proxqn-bench psistar --family lasso --scale n=300 --reps 10
    proxqn-bench run --family group-lasso --solver rpqn-bfgs --memory 3
    proxqn-bench compare --family lasso --solver rpqn-bfgs --solver fista
    proxqn-bench sweep --family group-lasso --scale 1 --scale 3 --scale 10

Exit codes: 0 on success, 2 on invalid arguments or files, 3 if a
solver run hit its iteration limit or stalled.

Functions:
    build_parser: Create the argument parser.
    specs_from_args: Build the run specifications of a command line.
    main: Entry point.

"""

import argparse
import json
import logging
import os
import sys

from proxqn.bench.comparison import compare
from proxqn.bench.comparison import sweep
from proxqn.bench.instances import build_instance
from proxqn.bench.psi_star import compute_psi_star
from proxqn.bench.run_spec import FAMILIES
from proxqn.bench.run_spec import SOLVERS
from proxqn.bench.run_spec import STOPS
from proxqn.bench.run_spec import RunSpec
from proxqn.bench.run_spec import parse_scale
from proxqn.bench.runner import run
from proxqn.problems.instance_io import save_instance

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_CONVERGED = 3

# Command-line flag destination -> `RunSpec` field.
_FLAG_FIELDS = {
    'family': 'family',
    'seed': 'seed',
    'tol': 'tol',
    'max_iter': 'max_iter',
    'reps': 'repetitions',
    'out': 'out',
    'cache_dir': 'cache_dir',
    'stop': 'stop',
    'workers': 'workers',
    'max_time': 'max_time_s',
}


def _add_common_arguments(parser):
    parser.add_argument('--family', choices=FAMILIES)
    parser.add_argument(
        '--scale', action='append',
        help="Scale such as 'k=4', 'n=750,m=375' or 'side=32'. Repeat "
        "for `sweep`."
    )
    parser.add_argument('--seed', type=int)
    parser.add_argument('--solver', action='append', choices=SOLVERS)
    parser.add_argument('--memory', action='append', type=int)
    parser.add_argument('--tol', type=float)
    parser.add_argument('--max-iter', dest='max_iter', type=int)
    parser.add_argument('--reps', type=int)
    parser.add_argument('--out')
    parser.add_argument('--cache-dir', dest='cache_dir')
    parser.add_argument('--stop', choices=STOPS)
    parser.add_argument('--workers', type=int)
    parser.add_argument('--max-time', dest='max_time', type=float)
    parser.add_argument(
        '--config', help="JSON file whose keys mirror the run specification."
    )
    parser.add_argument('-v', '--verbose', action='count', default=0)


def build_parser():
    """Return the `argparse.ArgumentParser` of `proxqn-bench`."""
    parser = argparse.ArgumentParser(
        prog='proxqn-bench',
        description='Benchmark harness of the regularized proximal '
        'quasi-Newton method.'
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name, text in (
            ('generate', 'Write seeded instances to disk.'),
            ('psistar', 'Compute and cache reference optimal values.'),
            ('run', 'Run solvers and write their traces.'),
            ('compare', 'Summarize and plot existing traces.'),
            ('sweep', 'Run solvers over several scales.')):
        _add_common_arguments(subparsers.add_parser(name, help=text))
    return parser


def _base_fields(args):
    fields = {}
    if args.config is not None:
        try:
            with open(args.config) as f:
                fields = json.load(f)
        except (OSError, ValueError) as e:
            raise OSError(
                "Unable to read configuration {0}: {1}".format(args.config, e)
            ) from e
    for flag, field in _FLAG_FIELDS.items():
        value = getattr(args, flag)
        if value is not None:
            fields[field] = value
    return fields


def specs_from_args(args):
    """Build the run specifications described by a command line.

    JSON values from `--config` are overridden by explicit flags. One
    spec is built per solver and, for the quasi-Newton solvers, per
    memory. For `sweep` the first `--scale` is used here; the others
    are handled by `sweep`.

    Returns:
        A list of `RunSpec`.

    Raises:
        ValueError: If the arguments are inconsistent.

    """
    fields = _base_fields(args)
    family = fields.get('family', 'group-lasso')
    if args.scale:
        fields['scale'] = parse_scale(family, args.scale[0])
    solvers = args.solver or [fields.get('solver', 'rpqn-bfgs')]
    memories = args.memory or [fields.get('memory')]
    specs = []
    for solver in solvers:
        solver_memories = memories if solver.startswith('rpqn') else [None]
        for memory in solver_memories:
            spec_fields = dict(fields)
            spec_fields['solver'] = solver
            spec_fields['memory'] = memory
            specs.append(RunSpec.from_dict(spec_fields))
    return specs


def _comparison_directory(spec):
    return os.path.join(spec.out, spec.family, spec.scale_tag)


def _generate(specs):
    spec = specs[0]
    for seed in spec.seeds:
        problem = build_instance(spec.family, spec.scale, seed)
        directory = os.path.join(
            spec.out, 'instances', spec.family, spec.scale_tag,
            'seed{0}'.format(seed)
        )
        save_instance(problem, directory)
        print(directory)
    return EXIT_OK


def _psistar(specs):
    spec = specs[0]
    for seed in spec.seeds:
        problem = build_instance(spec.family, spec.scale, seed)
        psi_star = compute_psi_star(problem, cache_dir=spec.cache_dir)
        print('{0} {1:.17g}'.format(seed, psi_star))
    return EXIT_OK


def _run(specs):
    exit_code = EXIT_OK
    for spec in specs:
        result = run(spec)
        for rep in result.repetitions:
            summary = rep.summary
            print(
                '{0} seed {1}: {2} | iter {3} | f evals {4} | '
                '{5:.3f} s'.format(
                    spec.solver_label, rep.seed, rep.status, summary['iter'],
                    summary['function_eval'], summary['time_s']
                )
            )
        if result.non_converged:
            exit_code = EXIT_NOT_CONVERGED
    return exit_code


def _compare(specs):
    summary = compare(specs, _comparison_directory(specs[0]))
    print(summary.to_string())
    return EXIT_OK


def _sweep(specs, args):
    base = specs[0]
    scales = [parse_scale(base.family, text) for text in (args.scale or [])]
    if not scales:
        scales = [base.scale]
    solvers = sorted({spec.solver for spec in specs}, key=SOLVERS.index)
    out = os.path.join(base.out, base.family, 'sweep')
    frame = sweep(base, scales, solvers, out)
    print(frame.to_string(index=False))
    if (frame['converged_fraction'] < 1.).any():
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def main(argv=None):
    """Run the command line `argv` and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, format='%(asctime)s %(name)s %(levelname)s %(message)s'
    )

    try:
        specs = specs_from_args(args)
        if args.command == 'generate':
            return _generate(specs)
        if args.command == 'psistar':
            return _psistar(specs)
        if args.command == 'run':
            return _run(specs)
        if args.command == 'compare':
            return _compare(specs)
        return _sweep(specs, args)
    except (ValueError, OSError) as e:
        print('proxqn-bench: error: {0}'.format(e), file=sys.stderr)
        return EXIT_INVALID
