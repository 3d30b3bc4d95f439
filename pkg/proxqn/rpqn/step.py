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
"""Module for one iteration of the regularized proximal quasi-Newton
method.

Functions:
    predicted_reduction: Decrease of `psi` predicted by the model.
    classify_step: Classify a step by its reduction ratio.
    rpqn_step: Perform one iteration.

"""

import dataclasses
import time

import numpy as np

from proxqn.lmqn.compact_rep import build_compact
from proxqn.lmqn.pair_buffer import PushResult
from proxqn.lmqn.pair_buffer import gamma_init
from proxqn.lmqn.pair_buffer import push_pair
from proxqn.lmqn.spectral_split import SpectralSplit
from proxqn.lmqn.spectral_split import SpectralSplitError
from proxqn.lmqn.spectral_split import eigensplit
from proxqn.prox.scaled_prox import ScaledProxContext
from proxqn.rpqn.records import IterationRecord
from proxqn.rpqn.records import StepClass
from proxqn.rpqn.stationarity import residual
from proxqn.subsolver.metric_factors import NotPositiveDefinite
from proxqn.subsolver.metric_factors import factor_metric
from proxqn.subsolver.newton import NoConvergence
from proxqn.subsolver.metric_prox import solve_subproblem

# Predicted reductions below this value are treated as zero.
PRED_FLOOR = 1e-30


def predicted_reduction(g, d, phi_x, phi_xd, Bd):
    """Return `-(g^T d + phi(x + d) - phi(x)) - 1/2 d^T B d`.

    `B` is the quasi-Newton matrix without the regularization `mu I`.

    """
    return -(float(g @ d) + phi_xd - phi_x) - .5 * float(d @ Bd)


def classify_step(rho, c1, c2):
    """Classify a step by its ratio `rho = ared / pred`."""
    if not rho > c1:
        return StepClass.UNSUCCESSFUL
    if rho <= c2:
        return StepClass.SUCCESSFUL
    return StepClass.HIGHLY_SUCCESSFUL


def _record(state, **kwargs):
    return IterationRecord(
        k=state.k, time_s=state.time_s, psi=state.psi,
        res_norm=state.res_norm, mu=state.mu, **kwargs, **state.counts
    )


def _metric_split(state, config, n):
    rep = build_compact(state.buffer, state.gamma, config.kind)
    try:
        return eigensplit(rep, config.eps_split)
    except SpectralSplitError:
        return SpectralSplit.empty(n)


def rpqn_step(problem, state, config, start_time=None):
    """Perform one iteration from `state`.

    The step minimizes the model with metric `B + mu I`. It is
    rejected (iterate kept, `mu` multiplied by `sigma2`) if the metric
    is not positive definite, the inner Newton method fails, the
    predicted reduction is too small, or the ratio
    `rho = ared / pred` is at most `c1`. Otherwise the step is taken,
    the curvature pair is offered to the buffer and, for
    `rho > c2`, `mu` is multiplied by `sigma1`.

    Arguments:
        problem: A `CompositeProblem`.
        state: An `RpqnState`.
        config: An `RpqnConfig`.
        start_time (optional): The `time.perf_counter` value at the
            start of the run.

    Returns:
        new_state: The next `RpqnState`.
        record: The `IterationRecord` of `state` and its step.

    """
    if start_time is None:
        start_time = time.perf_counter()

    def rejected(sub_iters=0, **kwargs):
        if config.reset_memory_on_failure:
            state.buffer.clear()
        new_state = dataclasses.replace(
            state, mu=config.sigma2 * state.mu, k=state.k + 1,
            time_s=time.perf_counter() - start_time,
            counts=problem.counter.snapshot()
        )
        record = _record(
            state, step_class=StepClass.UNSUCCESSFUL, sub_iters=sub_iters,
            **kwargs
        )
        return new_state, record

    split = _metric_split(state, config, problem.dim)
    fac = factor_metric(split, state.gamma, state.mu)
    if isinstance(fac, NotPositiveDefinite):
        return rejected()
    ctx = ScaledProxContext(
        spec=problem.nonsmooth, gamma_hat=fac.gamma_hat,
        counter=problem.counter
    )
    out = solve_subproblem(
        state.x, state.grad, fac, ctx, tol=config.newton_tol,
        maxit=config.newton_maxit, return_alpha=True
    )
    if isinstance(out, NoConvergence):
        return rejected(out.n_iter, sub_residual=out.residual_norm)
    d, alpha = out
    sub = dict(sub_iters=alpha.n_iter, sub_residual=alpha.residual_norm)

    d_norm = float(np.linalg.norm(d))
    x_trial = state.x + d
    phi_trial = problem.phi(x_trial)
    pred = predicted_reduction(
        state.grad, d, state.phi, phi_trial, split.apply(state.gamma, d)
    )
    if not pred > config.p_min * d_norm * state.res_norm or pred < PRED_FLOOR:
        return rejected(pred=pred, d_norm=d_norm, **sub)

    f_trial = problem.f(x_trial)
    ared = state.psi - (f_trial + phi_trial)
    rho = ared / pred
    step_class = classify_step(rho, config.c1, config.c2)
    if step_class is StepClass.UNSUCCESSFUL:
        return rejected(rho=rho, pred=pred, ared=ared, d_norm=d_norm, **sub)

    grad_trial = problem.grad(x_trial)
    y = grad_trial - state.grad
    pushed = push_pair(state.buffer, d, y, config.kind, config.eps_skip)
    gamma = state.gamma
    if pushed is PushResult.ACCEPTED or config.memory == 0:
        gamma = gamma_init(d, y, fallback=state.gamma)
    mu = state.mu
    if step_class is StepClass.HIGHLY_SUCCESSFUL:
        mu = max(config.sigma1 * mu, config.mu_min)
    res_norm = float(np.linalg.norm(residual(problem, x_trial, grad_trial)))

    new_state = dataclasses.replace(
        state, x=x_trial, mu=mu, gamma=gamma, k=state.k + 1, f=f_trial,
        phi=phi_trial, grad=grad_trial, res_norm=res_norm,
        time_s=time.perf_counter() - start_time,
        counts=problem.counter.snapshot()
    )
    record = _record(
        state, rho=rho, step_class=step_class, pred=pred, ared=ared,
        d_norm=d_norm, skipped_pair=pushed is PushResult.SKIPPED, **sub
    )
    return new_state, record
