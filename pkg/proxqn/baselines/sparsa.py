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
"""Module for the SpaRSA baseline solver.

Classes:
    SparsaConfig: Tuning constants of SpaRSA.

Functions:
    sparsa_solve: Minimize a composite problem by proximal gradient
        steps with Barzilai-Borwein step parameters.

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
class SparsaConfig(object):
    """Configuration of `sparsa_solve`.

    Attributes:
        alpha0: Step parameter of the first iteration.
        alpha_min: Lower safeguard of the Barzilai-Borwein parameter.
        alpha_max: Upper safeguard of the Barzilai-Borwein parameter.
        eta: Factor by which the parameter grows during backtracking.
        sigma: Constant of the sufficient-decrease test.
        fixed_alpha: If True, every iteration starts from `alpha0`
            instead of the Barzilai-Borwein value.
        tol_r: Residual tolerance used when `stop` is None.
        max_iter: Maximum number of iterations.
        stop: A stop rule; defaults to `ResidualStop(tol_r)`.
        max_time_s: Optional wall-clock budget in seconds.
        max_backtracks: Backtracking trials per iteration before the
            run ends as stalled.
        verbose: Print one progress line every `verbose` iterations.

    """

    alpha0: float = 1.
    alpha_min: float = 1e-30
    alpha_max: float = 1e30
    eta: float = 2.
    sigma: float = 1e-4
    fixed_alpha: bool = False
    tol_r: float = 1e-6
    max_iter: int = 10000
    stop: object = None
    max_time_s: float = None
    max_backtracks: int = 200
    verbose: int = 0

    def __post_init__(self):
        if not 0 < self.alpha_min < self.alpha_max:
            raise ValueError(
                "The arguments must satisfy `0 < alpha_min < alpha_max`."
            )
        if not self.alpha_min <= self.alpha0 <= self.alpha_max:
            raise ValueError(
                "The argument `alpha0` must lie in [alpha_min, alpha_max]."
            )
        if not self.eta > 1:
            raise ValueError("The argument `eta` must be greater than 1.")
        if not 0 < self.sigma < 1:
            raise ValueError("The argument `sigma` must lie in (0, 1).")
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


def sparsa_solve(problem, x0=None, config=None):
    """Minimize `f + phi` by SpaRSA with monotone acceptance.

    Each iteration starts from the Barzilai-Borwein parameter
    `alpha = s^T y / s^T s` of the previous step, clamped to
    `[alpha_min, alpha_max]`, and computes
    `x+ = prox_{phi/alpha}(x - grad f(x) / alpha)`. The candidate is
    accepted once `psi(x+) <= psi(x) - sigma alpha/2 ||x+ - x||^2`;
    otherwise `alpha` is multiplied by `eta`. `f` need not be convex.

    Arguments:
        problem: A `CompositeProblem`.
        x0 (optional): The start point. Defaults to `problem.x0`.
        config (optional): A `SparsaConfig`.

    Returns:
        x: The final iterate.
        trace: A `TraceTable`. The `mu` column holds the accepted
            step parameter.
        status: A `SolveStatus`.

    """
    if config is None:
        config = SparsaConfig()
    if x0 is None:
        x0 = problem.x0
    stop = config.stop_rule
    counter = problem.counter

    start_time = time.perf_counter()
    x = np.array(x0, dtype=float)
    f = problem.f(x)
    phi = problem.phi(x)
    g = problem.grad(x)
    res_norm = np.nan
    if stop.needs_residual:
        res_norm = float(np.linalg.norm(residual(problem, x, g)))
    alpha = float(config.alpha0)
    time_s = time.perf_counter() - start_time
    counts = counter.snapshot()
    trace = TraceTable(psi_star=reference_value(stop))
    if config.verbose > 0:
        print_header('SpaRSA')

    k = 0
    while True:
        psi = f + phi
        status = termination_status(
            stop, psi, res_norm, k, config.max_iter,
            time.perf_counter() - start_time, config.max_time_s
        )
        if status is not None:
            break

        if config.fixed_alpha:
            alpha = float(config.alpha0)
        n_backtrack = 0
        while True:
            ctx = ScaledProxContext(
                spec=problem.nonsmooth, gamma_hat=alpha, counter=counter
            )
            x_new = prox_scaled(ctx, x - g / alpha)
            s = x_new - x
            ss = float(s @ s)
            f_new = problem.f(x_new)
            phi_new = problem.phi(x_new)
            if f_new + phi_new <= psi - .5 * config.sigma * alpha * ss:
                break
            alpha = config.eta * alpha
            n_backtrack += 1
            if n_backtrack > config.max_backtracks:
                break
        if n_backtrack > config.max_backtracks:
            status = SolveStatus.STALLED
            break
        if ss == 0.:
            # A fixed point of the prox-gradient map is stationary.
            res_norm = float(np.linalg.norm(residual(problem, x, g)))
            status = SolveStatus.STALLED
            if stop.satisfied(psi, res_norm) or res_norm <= config.tol_r:
                status = SolveStatus.CONVERGED
            break

        g_new = problem.grad(x_new)
        record = IterationRecord(
            k=k, time_s=time_s, psi=psi, res_norm=res_norm, mu=alpha,
            ared=psi - (f_new + phi_new), d_norm=float(np.sqrt(ss)),
            sub_iters=n_backtrack, **counts
        )
        trace.append(record)
        if config.verbose > 0 and k % config.verbose == 0:
            print_progress(record)

        if ss > 0:
            alpha_bb = float(s @ (g_new - g)) / ss
            alpha = min(config.alpha_max, max(config.alpha_min, alpha_bb))
        x, f, phi, g = x_new, f_new, phi_new, g_new
        if stop.needs_residual:
            res_norm = float(np.linalg.norm(residual(problem, x, g)))
        k += 1
        time_s = time.perf_counter() - start_time
        counts = counter.snapshot()

    final = IterationRecord(
        k=k, time_s=time_s, psi=f + phi, res_norm=res_norm, mu=alpha,
        **counts
    )
    trace.append(final)
    if config.verbose > 0:
        print_progress(final)
        print('    Status: {0} after {1} iterations'.format(status.value, k))
    return x, trace, status
