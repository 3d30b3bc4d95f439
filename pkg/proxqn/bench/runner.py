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
"""Module for executing benchmark runs.

Classes:
    RepetitionResult: Outcome of one repetition.
    RunResult: Outcome of all repetitions of a `RunSpec`.

Functions:
    make_stop: Build the stop rule of a repetition.
    make_solver: Build the solver function and configuration of a spec.
    run_directory: Output directory of a spec.
    run: Execute all repetitions of a spec and write their traces.

"""

import concurrent.futures
import dataclasses
import json
import logging
import os

import pandas as pd
from tqdm import tqdm

from proxqn.baselines.fista import FistaConfig
from proxqn.baselines.fista import fista_solve
from proxqn.baselines.sparsa import SparsaConfig
from proxqn.baselines.sparsa import sparsa_solve
from proxqn.bench.instances import build_instance
from proxqn.bench.psi_star import compute_psi_star
from proxqn.bench.run_spec import RunSpec
from proxqn.problems.haar import haar2d_inverse
from proxqn.rpqn.config import RpqnConfig
from proxqn.rpqn.records import SolveStatus
from proxqn.rpqn.driver import solve
from proxqn.rpqn.stopping import ObjectiveErrorStop
from proxqn.rpqn.stopping import ResidualStop
from proxqn.rpqn.stopping import TargetValueStop
from proxqn.utils.pgm import write_pgm

logger = logging.getLogger(__name__)

AGGREGATE_NAME = 'aggregate.csv'


@dataclasses.dataclass
class RepetitionResult(object):
    """Outcome of one repetition.

    Attributes:
        seed: The instance seed.
        status: The `SolveStatus` value.
        psi_star: The reference value (None for residual stops).
        trace_path: Location of the trace CSV.
        sidecar_path: Location of the JSON sidecar.
        summary: Iteration and evaluation totals of the trace.

    """

    seed: int
    status: str
    psi_star: float
    trace_path: str
    sidecar_path: str
    summary: dict

    @property
    def converged(self):
        return self.status == SolveStatus.CONVERGED.value


@dataclasses.dataclass
class RunResult(object):
    """Outcome of all repetitions of a `RunSpec`.

    Attributes:
        spec: The `RunSpec`.
        repetitions: A list of `RepetitionResult`, ordered by seed.
        aggregate_path: Location of the per-iteration averages.

    """

    spec: RunSpec
    repetitions: list
    aggregate_path: str

    @property
    def all_converged(self):
        return all(rep.converged for rep in self.repetitions)

    @property
    def non_converged(self):
        """Return repetitions that hit the iteration limit or stalled."""
        failed = (SolveStatus.MAX_ITER.value, SolveStatus.STALLED.value)
        return [rep for rep in self.repetitions if rep.status in failed]


def run_directory(spec):
    """Return `<out>/<family>/<scale tag>/<solver label>`."""
    return os.path.join(
        spec.out, spec.family, spec.scale_tag, spec.solver_label
    )


def make_stop(spec, problem):
    """Return the stop rule of one repetition and its reference value.

    Returns:
        stop: A stop rule.
        psi_star: The reference value (None for residual stops).

    """
    if spec.stop == 'residual':
        return ResidualStop(spec.tol), None
    if spec.stop == 'target-value':
        psi_target = problem.metadata['psi_reference']
        return TargetValueStop(psi_target), psi_target
    psi_star = compute_psi_star(problem, cache_dir=spec.cache_dir)
    return ObjectiveErrorStop(psi_star, spec.tol), psi_star


def make_solver(spec, stop):
    """Return `(solver_fn, config)` for a spec and stop rule."""
    fields = dict(spec.overrides)
    fields['stop'] = stop
    if spec.max_iter is not None:
        fields['max_iter'] = spec.max_iter
    if spec.max_time_s is not None:
        fields['max_time_s'] = spec.max_time_s
    if spec.solver in ('rpqn-bfgs', 'rpqn-sr1'):
        fields['kind'] = spec.solver.split('-')[1]
        fields['memory'] = spec.memory
        return solve, RpqnConfig(**fields)
    if spec.solver == 'fista':
        return fista_solve, FistaConfig(**fields)
    return sparsa_solve, SparsaConfig(**fields)


def _write_previews(problem, x, directory, seed):
    data = problem.data
    side = data.side
    prefix = os.path.join(directory, 'seed{0}'.format(seed))
    write_pgm(data.true_image, prefix + '_true.pgm')
    write_pgm(data.observed, prefix + '_observed.pgm')
    restored = haar2d_inverse(x, side=side, levels=data.levels)
    write_pgm(restored, prefix + '_restored.pgm')


def run_repetition(spec_dict, seed):
    """Run one repetition and write its trace, sidecar and previews.

    Arguments:
        spec_dict: A dictionary made by `RunSpec.to_dict`.
        seed: The instance seed.

    Returns:
        A `RepetitionResult`.

    Raises:
        OSError: If an output file cannot be written.

    """
    spec = RunSpec.from_dict(spec_dict)
    problem = build_instance(spec.family, spec.scale, seed)
    logger.info(
        'Instance generated: %s %s seed %d (n=%d)', spec.family,
        spec.scale_tag, seed, problem.dim
    )
    stop, psi_star = make_stop(spec, problem)
    solver_fn, config = make_solver(spec, stop)
    x, trace, status = solver_fn(problem, problem.x0, config)

    directory = run_directory(spec)
    try:
        os.makedirs(directory, exist_ok=True)
    except OSError as e:
        raise OSError(
            "Unable to create output directory {0}: {1}".format(directory, e)
        ) from e
    trace_path = os.path.join(directory, 'seed{0}.csv'.format(seed))
    sidecar_path = os.path.join(directory, 'seed{0}.json'.format(seed))
    trace.save(trace_path)
    summary = trace.summary()
    sidecar = {
        'spec': spec.to_dict(),
        'seed': seed,
        'solver_label': spec.solver_label,
        'status': status.value,
        'psi_star': psi_star,
        'config': config.to_dict(),
        'summary': summary,
    }
    try:
        with open(sidecar_path, 'w') as f:
            json.dump(sidecar, f, indent=2)
    except OSError as e:
        raise OSError(
            "Unable to write {0}: {1}".format(sidecar_path, e)
        ) from e
    if spec.family == 'student-t':
        _write_previews(problem, x, directory, seed)
    logger.info('Trace written: %s (%s)', trace_path, status.value)
    return RepetitionResult(
        seed=seed, status=status.value, psi_star=psi_star,
        trace_path=trace_path, sidecar_path=sidecar_path, summary=summary
    )


def aggregate_traces(trace_paths):
    """Average the numeric trace columns over repetitions per iteration.

    Rows are matched by `k`; the column `n_runs` counts how many
    repetitions reached iteration `k`.

    Arguments:
        trace_paths: A list of trace CSV locations.

    Returns:
        A `pandas.DataFrame` indexed by `k`.

    """
    frames = []
    for i_rep, filepath in enumerate(trace_paths):
        frame = pd.read_csv(filepath)
        frame['rep'] = i_rep
        frames.append(frame)
    frame = pd.concat(frames, ignore_index=True)
    numeric = frame.drop(columns=['step_class', 'rep']).apply(
        pd.to_numeric, errors='coerce'
    )
    grouped = numeric.groupby('k')
    aggregate = grouped.mean()
    aggregate['n_runs'] = grouped.size()
    return aggregate


def run(spec, progress=True):
    """Execute all repetitions of a spec.

    Repetition `r` uses the instance seed `spec.seed + r`. One CSV
    trace and one JSON sidecar per repetition are written to
    `run_directory(spec)`, together with `aggregate.csv` holding the
    per-iteration averages over repetitions. With `spec.workers > 1`
    repetitions run in separate processes; results are ordered by
    seed.

    Arguments:
        spec: A `RunSpec`.
        progress (optional): Show a progress bar over repetitions.

    Returns:
        A `RunResult`.

    Raises:
        OSError: If an output file cannot be written.

    """
    spec_dict = spec.to_dict()
    seeds = spec.seeds
    pbar = tqdm(
        total=len(seeds), desc=spec.solver_label, unit='run',
        disable=not progress
    )
    results = {}
    if spec.workers > 1 and len(seeds) > 1:
        with concurrent.futures.ProcessPoolExecutor(
                max_workers=spec.workers) as executor:
            futures = {
                executor.submit(run_repetition, spec_dict, seed): seed
                for seed in seeds
            }
            for future in concurrent.futures.as_completed(futures):
                results[futures[future]] = future.result()
                pbar.update(1)
    else:
        for seed in seeds:
            results[seed] = run_repetition(spec_dict, seed)
            pbar.update(1)
    pbar.close()

    repetitions = [results[seed] for seed in seeds]
    aggregate = aggregate_traces([rep.trace_path for rep in repetitions])
    aggregate_path = os.path.join(run_directory(spec), AGGREGATE_NAME)
    try:
        aggregate.to_csv(aggregate_path, float_format='%.17g')
    except OSError as e:
        raise OSError(
            "Unable to write {0}: {1}".format(aggregate_path, e)
        ) from e

    n_failed = len([rep for rep in repetitions if not rep.converged])
    logger.info(
        '%s: %d of %d repetitions converged', spec.solver_label,
        len(repetitions) - n_failed, len(repetitions)
    )
    return RunResult(
        spec=spec, repetitions=repetitions, aggregate_path=aggregate_path
    )
