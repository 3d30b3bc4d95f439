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
"""Module for the FISTA baseline solver.

Classes:
    FistaConfig: Tuning constants of FISTA.

Functions:
    fista_solve: Minimize a convex composite problem by FISTA with
        backtracking.

"""

import dataclasses
import time

import numpy as np

from proxqn.prox.scaled_prox import ScaledProxContext
from proxqn.prox.scaled_prox import prox_scaled
from proxqn.rpqn.records import IterationRecord
from proxqn.rpqn.records import SolveStatus
from proxqn.rpqn.stationarity import residual
from proxqn.rpqn.driver import print_header
from proxqn.rpqn.driver import print_progress
from proxqn.rpqn.driver import termination_status
from proxqn.rpqn.stopping import ResidualStop
from proxqn.rpqn.stopping import reference_value
from proxqn.rpqn.stopping import stop_from_dict
from proxqn.rpqn.stopping import stop_to_dict
from proxqn.utils.trace_table import TraceTable


@dataclasses.dataclass(frozen=True)
class FistaConfig(object):
    """Configuration of `fista_solve`.

    Attributes:
        L0: Initial estimate of the Lipschitz constant of the gradient.
        eta: Factor by which the estimate grows during backtracking.
        tol_r: Residual tolerance used when `stop` is None.
        max_iter: Maximum number of iterations.
        stop: A stop rule; defaults to `ResidualStop(tol_r)`.
        max_time_s: Optional wall-clock budget in seconds.
        max_backtracks: Backtracking trials per iteration before the
            run ends as stalled.
        verbose: Print one progress line every `verbose` iterations.

    """

    L0: float = 1.
    eta: float = 2.
    tol_r: float = 1e-6
    max_iter: int = 10000
    stop: object = None
    max_time_s: float = None
    max_backtracks: int = 200
    verbose: int = 0

    def __post_init__(self):
        if not self.L0 > 0:
            raise ValueError("The argument `L0` must be positive.")
        if not self.eta > 1:
            raise ValueError("The argument `eta` must be greater than 1.")
        if not self.tol_r > 0:
            raise ValueError("The argument `tol_r` must be positive.")
        if self.max_iter < 0:
            raise ValueError("The argument `max_iter` must be non-negative.")
        if self.max_time_s is not None and not self.max_time_s > 0:
            raise ValueError("The argument `max_time_s` must be positive.")
        if self.max_backtracks < 1:
            raise ValueError("The argument `max_backtracks` must be positive.")

    @property
    def stop_rule(self):
        if self.stop is None:
            return ResidualStop(self.tol_r)
        return self.stop

    def to_dict(self):
        d = dataclasses.asdict(self)
        d['stop'] = None if self.stop is None else stop_to_dict(self.stop)
        return d

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        if d.get('stop') is not None:
            d['stop'] = stop_from_dict(d['stop'])
        return cls(**d)


def fista_solve(problem, x0=None, config=None):
    """Minimize `f + phi` by FISTA with backtracking.

    At the extrapolated point `y` the candidate
    `x+ = prox_{phi/L}(y - grad f(y) / L)` is accepted once
    `f(x+) <= f(y) + grad f(y)^T (x+ - y) + L/2 ||x+ - y||^2`;
    otherwise `L` is multiplied by `eta`. `L` never decreases. The
    method assumes `f` is convex.

    Arguments:
        problem: A `CompositeProblem`.
        x0 (optional): The start point. Defaults to `problem.x0`.
        config (optional): A `FistaConfig`.

    Returns:
        x: The final iterate.
        trace: A `TraceTable`. The `mu` column holds `L`.
        status: A `SolveStatus`.

    """
    if config is None:
        config = FistaConfig()
    if x0 is None:
        x0 = problem.x0
    stop = config.stop_rule
    counter = problem.counter

    def residual_norm(x):
        if not stop.needs_residual:
            return np.nan
        return float(np.linalg.norm(residual(problem, x)))

    start_time = time.perf_counter()
    x = np.array(x0, dtype=float)
    psi = problem.psi(x)
    res_norm = residual_norm(x)
    y = x.copy()
    t = 1.
    L = float(config.L0)
    time_s = time.perf_counter() - start_time
    counts = counter.snapshot()
    trace = TraceTable(psi_star=reference_value(stop))
    if config.verbose > 0:
        print_header('FISTA')

    k = 0
    while True:
        status = termination_status(
            stop, psi, res_norm, k, config.max_iter,
            time.perf_counter() - start_time, config.max_time_s
        )
        if status is not None:
            break

        f_y = problem.f(y)
        g_y = problem.grad(y)
        slack = 10. * np.finfo(float).eps * max(1., abs(f_y))
        n_backtrack = 0
        while True:
            ctx = ScaledProxContext(
                spec=problem.nonsmooth, gamma_hat=L, counter=counter
            )
            x_new = prox_scaled(ctx, y - g_y / L)
            diff = x_new - y
            f_new = problem.f(x_new)
            bound = f_y + float(g_y @ diff) + .5 * L * float(diff @ diff)
            if f_new <= bound + slack:
                break
            L = config.eta * L
            n_backtrack += 1
            if n_backtrack > config.max_backtracks:
                break
        if n_backtrack > config.max_backtracks:
            status = SolveStatus.STALLED
            break

        psi_new = f_new + problem.phi(x_new)
        t_new = .5 * (1. + np.sqrt(1. + 4. * t * t))
        y = x_new + ((t - 1.) / t_new) * (x_new - x)
        record = IterationRecord(
            k=k, time_s=time_s, psi=psi, res_norm=res_norm, mu=L,
            ared=psi - psi_new, d_norm=float(np.linalg.norm(x_new - x)),
            sub_iters=n_backtrack, **counts
        )
        trace.append(record)
        if config.verbose > 0 and k % config.verbose == 0:
            print_progress(record)

        x = x_new
        t = t_new
        psi = psi_new
        res_norm = residual_norm(x)
        k += 1
        time_s = time.perf_counter() - start_time
        counts = counter.snapshot()

    final = IterationRecord(
        k=k, time_s=time_s, psi=psi, res_norm=res_norm, mu=L, **counts
    )
    trace.append(final)
    if config.verbose > 0:
        print_progress(final)
        print('    Status: {0} after {1} iterations'.format(status.value, k))
    return x, trace, status
