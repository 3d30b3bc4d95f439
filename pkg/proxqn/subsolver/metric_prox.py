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
"""Module for the variable-metric proximity operator and subproblem.

Functions:
    prox_metric: Evaluate `prox_phi^{B_hat}(y)`.
    solve_subproblem: Compute the regularized quasi-Newton step.

"""

from proxqn.prox.scaled_prox import prox_scaled
from proxqn.subsolver.metric_factors import NotPositiveDefinite
from proxqn.subsolver.metric_factors import apply_B_inv
from proxqn.subsolver.newton import NoConvergence
from proxqn.subsolver.newton import multipliers_at
from proxqn.subsolver.newton import semismooth_newton
from proxqn.subsolver.newton import shifted_point


def prox_metric(
        fac, ctx, y, tol=1e-10, maxit=10, return_alpha=False, alpha0=None):
    """Evaluate the proximity operator in the metric `B_hat`.

    Arguments:
        fac: A `MetricFactors` object.
        ctx: A `ScaledProxContext` with `gamma_hat == fac.gamma_hat`.
        y: The prox argument.
        tol (optional): Newton tolerance on `||L||`.
        maxit (optional): Maximum Newton updates.
        return_alpha (optional): Also return the `AlphaPair`.
        alpha0 (optional): Start multipliers tried besides zero.

    Returns:
        p: The prox (or `(p, alpha)` if `return_alpha`), or the
            `NoConvergence` object when the Newton method fails.

    """
    alpha = semismooth_newton(
        fac, ctx, y, alpha0=alpha0, tol=tol, maxit=maxit
    )
    if isinstance(alpha, NoConvergence):
        return alpha
    p = prox_scaled(ctx, shifted_point(fac, y, alpha))
    if return_alpha:
        return p, alpha
    return p


def solve_subproblem(
        x, g, fac, ctx, tol=1e-10, maxit=10, return_alpha=False):
    """Compute `d = prox_phi^{B_hat}(x - B_hat^{-1} g) - x`.

    This is the exact minimizer of the regularized quadratic model
    `g^T d + 1/2 d^T B_hat d + phi(x + d)`. The Newton method is
    warm started with the multipliers that belong to the prox value
    `x`, which are exact when `d = 0`.

    Arguments:
        x: The current iterate.
        g: The gradient of the smooth part at `x`.
        fac: A `MetricFactors` object (a `NotPositiveDefinite` object
            is passed through unchanged).
        ctx: A `ScaledProxContext` with `gamma_hat == fac.gamma_hat`.
        tol (optional): Newton tolerance.
        maxit (optional): Maximum Newton updates.
        return_alpha (optional): Also return the `AlphaPair`.

    Returns:
        d (or `(d, alpha)`), or the `NotPositiveDefinite` /
        `NoConvergence` object that prevented the solve.

    """
    if isinstance(fac, NotPositiveDefinite):
        return fac
    y = x - apply_B_inv(fac, g)
    out = prox_metric(
        fac, ctx, y, tol=tol, maxit=maxit, return_alpha=True,
        alpha0=multipliers_at(fac, y, x)
    )
    if isinstance(out, NoConvergence):
        return out
    p, alpha = out
    if return_alpha:
        return p - x, alpha
    return p - x
