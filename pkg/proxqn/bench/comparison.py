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
"""Module for comparing benchmark runs.

Functions:
    load_run: Load the traces and sidecars of a spec.
    time_to_tolerance: First time at which a trace reaches a tolerance.
    summarize_run: Per-repetition counts of a spec.
    compare: Summary table and convergence plot of several specs.
    sweep: Run several solvers over a list of scales.

Notes:
    The `matvec` column counts applications of the forward operator
    and of its adjoint separately; one smooth-part value costs one
    application and one gradient two.

"""

import dataclasses
import json
import logging
import os
import warnings

import numpy as np
import pandas as pd
from matplotlib.figure import Figure

from proxqn.bench.plots import plot_convergence
from proxqn.bench.plots import plot_sweep
from proxqn.bench.run_spec import scale_dimension
from proxqn.bench.runner import AGGREGATE_NAME
from proxqn.bench.runner import run
from proxqn.bench.runner import run_directory
from proxqn.utils.trace_table import TraceTable

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = (
    'iter', 'highly_succ_iter', 'succ_iter', 'unsucc_iter', 'sub_iter',
    'function_eval', 'gradient_eval', 'prox_eval', 'matvec',
    'skipped_updates', 'time_s'
)


def load_run(spec):
    """Load the traces and sidecars written by `run(spec)`.

    Returns:
        A list of `(seed, TraceTable, sidecar)` tuples ordered by seed.

    Raises:
        OSError: If a trace or sidecar file is missing.

    """
    directory = run_directory(spec)
    loaded = []
    for seed in spec.seeds:
        trace_path = os.path.join(directory, 'seed{0}.csv'.format(seed))
        sidecar_path = os.path.join(directory, 'seed{0}.json'.format(seed))
        for filepath in (trace_path, sidecar_path):
            if not os.path.exists(filepath):
                raise OSError(
                    "Missing trace file {0}; execute the run first.".format(
                        filepath
                    )
                )
        with open(sidecar_path) as f:
            sidecar = json.load(f)
        trace = TraceTable.load(trace_path, psi_star=sidecar['psi_star'])
        loaded.append((seed, trace, sidecar))
    return loaded


def time_to_tolerance(frame, tol):
    """Return the first `time_s` with `obj_err <= tol` (NaN if never)."""
    reached = frame['obj_err'].to_numpy(dtype=float) <= tol
    if not np.any(reached):
        return np.nan
    return float(frame['time_s'].to_numpy(dtype=float)[np.argmax(reached)])


def summarize_run(spec):
    """Return one row of counts per repetition of `spec`."""
    rows = []
    for seed, trace, sidecar in load_run(spec):
        frame = trace.to_frame()
        row = {
            'solver_label': spec.solver_label,
            'seed': seed,
            'status': sidecar['status'],
        }
        row.update(trace.summary())
        row['final_obj_err'] = float(trace.final['obj_err'])
        row['time_to_tol'] = time_to_tolerance(frame, spec.tol)
        rows.append(row)
    return pd.DataFrame(rows)


def _curve(spec):
    aggregate_path = os.path.join(run_directory(spec), AGGREGATE_NAME)
    if os.path.exists(aggregate_path):
        frame = pd.read_csv(aggregate_path)
    else:
        frame = load_run(spec)[0][1].to_frame()
    return frame['time_s'].to_numpy(), frame['obj_err'].to_numpy()


def check_relative_performance(summary, reference='rpqn-bfgs'):
    """Warn if a first-order solver reached the tolerance first.

    Arguments:
        summary: The averaged summary `pandas.DataFrame` of `compare`.
        reference (optional): Label prefix of the reference solver.

    Returns:
        A list of `(reference label, other label, time ratio)` for
        every violated comparison.

    """
    times = summary['time_to_tol']
    ref_labels = [lab for lab in times.index if lab.startswith(reference)]
    others = [lab for lab in times.index if lab in ('fista', 'sparsa')]
    violations = []
    for ref in ref_labels:
        for other in others:
            if np.isnan(times[other]):
                continue
            ratio = times[ref] / times[other]
            if np.isnan(ratio) or ratio > 1.:
                violations.append((ref, other, ratio))
                warnings.warn(
                    "{0} reached the tolerance {1:.2f}x slower than "
                    "{2}.".format(ref, ratio, other)
                )
    return violations


def compare(specs, out):
    """Summarize and plot the runs of several specs.

    Writes `runs.csv` (one row per repetition), `summary.csv` (means
    per solver) and `convergence.svg` (objective value error against
    run time) to `out`.

    Arguments:
        specs: A list of `RunSpec` whose runs have been executed.
        out: The output directory.

    Returns:
        summary: A `pandas.DataFrame` indexed by solver label with the
            mean of every count over repetitions.

    Raises:
        OSError: If a trace is missing or an output cannot be written.

    """
    runs = pd.concat(
        [summarize_run(spec) for spec in specs], ignore_index=True
    )
    columns = list(SUMMARY_COLUMNS) + ['final_obj_err', 'time_to_tol']
    summary = runs.groupby('solver_label', sort=False)[columns].mean()
    summary['n_runs'] = runs.groupby('solver_label', sort=False).size()
    summary['n_converged'] = runs.assign(
        converged=runs['status'] == 'converged'
    ).groupby('solver_label', sort=False)['converged'].sum()

    os.makedirs(out, exist_ok=True)
    runs_path = os.path.join(out, 'runs.csv')
    summary_path = os.path.join(out, 'summary.csv')
    figure_path = os.path.join(out, 'convergence.svg')
    try:
        runs.to_csv(runs_path, index=False, float_format='%.17g')
        summary.to_csv(summary_path, float_format='%.17g')
    except OSError as e:
        raise OSError(
            "Unable to write summary to {0}: {1}".format(out, e)
        ) from e

    curves = {spec.solver_label: _curve(spec) for spec in specs}
    fig = Figure(figsize=(6.5, 4.5))
    ax = fig.add_subplot(1, 1, 1)
    plot_convergence(ax, curves, tol=specs[0].tol)
    ax.set_title('{0} ({1})'.format(specs[0].family, specs[0].scale_tag))
    description = json.dumps([spec.to_dict() for spec in specs])
    fig.savefig(
        figure_path, format='svg', metadata={'Description': description}
    )
    logger.info('Comparison written: %s, %s', summary_path, figure_path)

    check_relative_performance(summary)
    return summary


def sweep(base_spec, scales, solvers, out):
    """Run several solvers over a list of scales.

    Writes `sweep.csv` and `sweep.svg` (mean time to tolerance against
    dimension) to `out`.

    Arguments:
        base_spec: A `RunSpec` providing everything but the scale and
            solver.
        scales: A list of scale dictionaries.
        solvers: A list of solver names.
        out: The output directory.

    Returns:
        A `pandas.DataFrame` with one row per (scale, solver).

    """
    rows = []
    for scale in scales:
        for solver in solvers:
            memory = base_spec.memory if solver == base_spec.solver else None
            spec = dataclasses.replace(
                base_spec, scale=dict(scale), solver=solver, memory=memory
            )
            result = run(spec)
            runs = summarize_run(spec)
            rows.append({
                'solver_label': spec.solver_label,
                'scale_tag': spec.scale_tag,
                'n': scale_dimension(spec.family, spec.scale),
                'time_to_tol': float(runs['time_to_tol'].mean()),
                'converged_fraction': float(
                    np.mean([rep.converged for rep in result.repetitions])
                ),
            })
    frame = pd.DataFrame(rows)

    os.makedirs(out, exist_ok=True)
    frame.to_csv(os.path.join(out, 'sweep.csv'), index=False)
    fig = Figure(figsize=(6.5, 4.5))
    ax = fig.add_subplot(1, 1, 1)
    plot_sweep(ax, frame)
    ax.set_title(base_spec.family)
    fig.savefig(os.path.join(out, 'sweep.svg'), format='svg')
    return frame
