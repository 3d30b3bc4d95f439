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
"""Module for the regularized proximal quasi-Newton driver.

Functions:
    termination_status: Check the termination conditions shared by all
        solvers.
    print_header: Print the column header of verbose output.
    print_progress: Print one line of verbose output.
    solve: Minimize a composite problem.

"""

import time

import numpy as np

from proxqn.rpqn.config import RpqnConfig
from proxqn.rpqn.records import IterationRecord
from proxqn.rpqn.records import SolveStatus
from proxqn.rpqn.state import RpqnState
from proxqn.rpqn.step import rpqn_step
from proxqn.rpqn.stopping import reference_value
from proxqn.utils.trace_table import TraceTable


def termination_status(
        stop, psi, res_norm, k, max_iter, elapsed_s, max_time_s=None):
    """Return the `SolveStatus` that ends a run, or None to continue."""
    if stop.satisfied(psi, res_norm):
        return SolveStatus.CONVERGED
    if k >= max_iter:
        return SolveStatus.MAX_ITER
    if max_time_s is not None and elapsed_s >= max_time_s:
        return SolveStatus.MAX_TIME
    return None


def print_header(name):
    """Print the column header of verbose solver output."""
    print('    {0}'.format(name))
    print(
        '    {0:>6s} | {1:>22s} | {2:>10s} | {3:>10s} | {4}'.format(
            'k', 'psi', 'res_norm', 'mu', 'step'
        )
    )


def print_progress(record):
    """Print one line of verbose solver output."""
    step = '' if record.step_class is None else record.step_class.value
    print(
        '    {0:6d} | {1:22.15e} | {2:10.3e} | {3:10.3e} | {4}'.format(
            record.k, record.psi, record.res_norm, record.mu, step
        )
    )


def solve(problem, x0=None, config=None):
    """Minimize `f + phi` by the regularized proximal quasi-Newton method.

    Arguments:
        problem: A `CompositeProblem`.
        x0 (optional): The start point. Defaults to `problem.x0`.
        config (optional): An `RpqnConfig`.

    Returns:
        x: The final iterate.
        trace: A `TraceTable` with one row per iteration (including
            unsuccessful ones) followed by a row for the final
            iterate.
        status: A `SolveStatus`.

    """
    if config is None:
        config = RpqnConfig()
    if x0 is None:
        x0 = problem.x0
    stop = config.stop_rule

    start_time = time.perf_counter()
    state = RpqnState.initial(problem, x0, config, start_time)
    trace = TraceTable(psi_star=reference_value(stop))
    if config.verbose > 0:
        print_header('RPQN ({0}, memory {1})'.format(
            config.kind.value, config.memory
        ))

    while True:
        status = termination_status(
            stop, state.psi, state.res_norm, state.k, config.max_iter,
            time.perf_counter() - start_time, config.max_time_s
        )
        if status is None and not (
                np.isfinite(state.mu) and state.mu <= config.mu_max):
            status = SolveStatus.STALLED
        if status is not None:
            break
        state, record = rpqn_step(problem, state, config, start_time)
        trace.append(record)
        if config.verbose > 0 and record.k % config.verbose == 0:
            print_progress(record)

    final = IterationRecord(
        k=state.k, time_s=state.time_s, psi=state.psi,
        res_norm=state.res_norm, mu=state.mu, **state.counts
    )
    trace.append(final)
    if config.verbose > 0:
        print_progress(final)
        print('    Status: {0} after {1} iterations ({2:.2f} s)'.format(
            status.value, state.k, state.time_s
        ))
    return state.x, trace, status
