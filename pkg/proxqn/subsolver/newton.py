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
"""Module for the semismooth Newton method on the coupled system.

The variable-metric proximity operator of
`B_hat = gamma_hat I + U1 U1^T - U2 U2^T` is obtained from a scaled
proximity operator evaluated at a shifted point. The shift is
determined by the zero `alpha = (alpha1, alpha2)` of a small
nonsmooth system `L(alpha) = 0` of order `r1 + r2`.

Classes:
    AlphaPair: Multipliers of the coupled system.
    NoConvergence: Returned when the Newton iteration fails.

Functions:
    shifted_point: The point at which the scaled prox is evaluated.
    eval_L: Evaluate the coupled system.
    eval_G: Evaluate a Newton derivative of the coupled system.
    multipliers_at: The multipliers belonging to a given prox value.
    semismooth_newton: Solve the coupled system.

"""

import dataclasses
import warnings

import numpy as np
import scipy.linalg

from proxqn.prox.scaled_prox import prox_newton_derivative_apply
from proxqn.prox.scaled_prox import prox_scaled

# Sufficient decrease constant of the backtracking on `||L||`.
ARMIJO = 1e-4
# Maximum number of step halvings per Newton update.
MAX_BACKTRACK = 20


@dataclasses.dataclass(frozen=True, eq=False)
class AlphaPair(object):
    """Multipliers `alpha1` (length r1) and `alpha2` (length r2).

    Attributes:
        alpha1: A 1D array.
        alpha2: A 1D array.
        n_iter: Newton iterations used to obtain the pair.
        residual_norm: Euclidean norm of `L` at the pair.

    """

    alpha1: np.ndarray
    alpha2: np.ndarray
    n_iter: int = 0
    residual_norm: float = np.nan

    @classmethod
    def zeros(cls, r1, r2):
        return cls(alpha1=np.zeros([r1]), alpha2=np.zeros([r2]))

    @classmethod
    def from_stacked(cls, alpha, r1, n_iter=0, residual_norm=np.nan):
        """Split a stacked vector into a pair."""
        return cls(
            alpha1=alpha[:r1].copy(), alpha2=alpha[r1:].copy(),
            n_iter=n_iter, residual_norm=residual_norm
        )

    def stacked(self):
        """Return `[alpha1; alpha2]`."""
        return np.concatenate([self.alpha1, self.alpha2])


@dataclasses.dataclass(frozen=True, eq=False)
class NoConvergence(object):
    """Outcome of `semismooth_newton` when no zero was found.

    Attributes:
        best: The `AlphaPair` with the smallest residual norm seen.
        n_iter: Newton iterations performed.
        residual_norm: Residual norm at `best`.
        reason: 'max_iter', 'singular' or 'line_search'.

    """

    best: AlphaPair
    n_iter: int
    residual_norm: float
    reason: str = 'max_iter'


def shifted_point(fac, y, a):
    """Return `y + W alpha2 - U1 alpha1 / gamma_hat`."""
    return y + fac.W @ a.alpha2 - fac.U1 @ a.alpha1 / fac.gamma_hat


def _eval_L_at(fac, ctx, y, a, z):
    p = prox_scaled(ctx, z)
    L1 = fac.U1.T @ (y + fac.W @ a.alpha2 - p) + a.alpha1
    L2 = fac.U2.T @ (y - p) + a.alpha2
    return np.concatenate([L1, L2])


def eval_L(fac, ctx, y, a):
    """Evaluate the coupled system at `a`.

    With `z = shifted_point(fac, y, a)` and `p = prox_scaled(ctx, z)`:
    `L1 = U1^T (y + W alpha2 - p) + alpha1` and
    `L2 = U2^T (y - p) + alpha2`.

    Arguments:
        fac: A `MetricFactors` object.
        ctx: A `ScaledProxContext` with `gamma_hat == fac.gamma_hat`.
        y: The prox argument.
        a: An `AlphaPair`.

    Returns:
        The stacked residual `[L1; L2]`.

    """
    return _eval_L_at(fac, ctx, y, a, shifted_point(fac, y, a))


def _eval_G_at(fac, ctx, z):
    r1 = fac.r1
    r2 = fac.r2
    U = np.hstack([fac.U1, fac.U2])
    V = np.hstack([fac.U1 / fac.gamma_hat, -fac.W])
    G = U.T @ prox_newton_derivative_apply(ctx, z, V)
    G[:r1, :r1] += np.eye(r1)
    G[:r1, r1:] += fac.cross
    G[r1:, r1:] += np.eye(r2)
    return G


def eval_G(fac, ctx, y, a):
    """Evaluate a Newton derivative of the coupled system at `a`.

    `G = [U1 U2]^T P(z) [U1 / gamma_hat, -W] + [[I, U1^T W], [0, I]]`
    where `P(z)` is a Newton derivative of the scaled prox.

    Returns:
        A square array of order `r1 + r2`.

    """
    return _eval_G_at(fac, ctx, shifted_point(fac, y, a))


def _solve_newton_system(G, rhs):
    """Solve `G x = rhs` by LU, regularizing once if singular.

    Returns None if both attempts fail.

    """
    scale = max(1., float(np.max(np.abs(np.diag(G)))))
    for shift in (0., 1e-12 * scale):
        G_try = G + shift * np.eye(G.shape[0])
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', scipy.linalg.LinAlgWarning)
            try:
                lu, piv = scipy.linalg.lu_factor(G_try)
            except ValueError:
                return None
        pivots = np.abs(np.diag(lu))
        if np.all(np.isfinite(lu)) and np.min(pivots) > 1e-14 * scale:
            return scipy.linalg.lu_solve((lu, piv), rhs)
    return None


def multipliers_at(fac, y, p):
    """Return the multipliers that make `p` the value of the prox.

    Solves `L(alpha) = 0` for `alpha` with the prox value held fixed
    at `p`, i.e. `alpha2 = U2^T (p - y)` and
    `alpha1 = U1^T (p - y - W alpha2)`. At the exact prox value the
    result is the zero of the coupled system.

    """
    v = np.asarray(p, dtype=float) - y
    alpha2 = fac.U2.T @ v
    alpha1 = fac.U1.T @ (v - fac.W @ alpha2)
    return AlphaPair(alpha1=alpha1, alpha2=alpha2)


def _residual_at(fac, ctx, y, alpha):
    a = AlphaPair.from_stacked(alpha, fac.r1)
    z = shifted_point(fac, y, a)
    L = _eval_L_at(fac, ctx, y, a, z)
    return z, L, float(np.linalg.norm(L))


def _line_search(fac, ctx, y, alpha, step, res):
    """Backtrack along `-step` until `||L||` decreases sufficiently.

    Returns `(alpha, z, L, res)` of the accepted trial, the best
    trial if none is sufficient but one decreases `||L||`, or None.

    """
    best = None
    t = 1.
    for _ in range(MAX_BACKTRACK + 1):
        trial = alpha - t * step
        z, L, res_trial = _residual_at(fac, ctx, y, trial)
        if np.isfinite(res_trial):
            if res_trial <= (1. - ARMIJO * t) * res:
                return trial, z, L, res_trial
            if best is None or res_trial < best[3]:
                best = (trial, z, L, res_trial)
        t *= .5
    if best is not None and best[3] < res:
        return best
    return None


def semismooth_newton(fac, ctx, y, alpha0=None, tol=1e-10, maxit=10):
    """Solve `L(alpha) = 0` by a damped semismooth Newton method.

    The iteration starts from the better (in `||L||`) of zero and
    `alpha0`. Each Newton direction is damped by halving the step
    until `||L(alpha - t step)|| <= (1 - ARMIJO t) ||L(alpha)||`.

    Arguments:
        fac: A `MetricFactors` object.
        ctx: A `ScaledProxContext` with `gamma_hat == fac.gamma_hat`.
        y: The prox argument.
        alpha0 (optional): An additional start candidate.
        tol (optional): Stop once `||L(alpha)|| < tol`.
        maxit (optional): Maximum number of Newton updates.

    Returns:
        An `AlphaPair` (with `n_iter` and `residual_norm` set) on
        success, otherwise `NoConvergence` carrying the best iterate.

    """
    r1 = fac.r1
    if r1 + fac.r2 == 0:
        return AlphaPair(
            alpha1=np.zeros([0]), alpha2=np.zeros([0]), n_iter=0,
            residual_norm=0.
        )
    starts = [AlphaPair.zeros(r1, fac.r2).stacked()]
    if alpha0 is not None:
        starts.append(np.asarray(alpha0.stacked(), dtype=float))

    alpha, z, L, res = None, None, None, np.inf
    for start in starts:
        z_try, L_try, res_try = _residual_at(fac, ctx, y, start)
        if alpha is None or res_try < res:
            alpha, z, L, res = start, z_try, L_try, res_try
    if res < tol:
        return AlphaPair.from_stacked(alpha, r1, 0, res)

    for i_iter in range(1, maxit + 1):
        step = _solve_newton_system(_eval_G_at(fac, ctx, z), L)
        if step is None or not np.all(np.isfinite(step)):
            return NoConvergence(
                best=AlphaPair.from_stacked(alpha, r1, i_iter - 1, res),
                n_iter=i_iter - 1, residual_norm=res, reason='singular'
            )
        accepted = _line_search(fac, ctx, y, alpha, step, res)
        if accepted is None:
            return NoConvergence(
                best=AlphaPair.from_stacked(alpha, r1, i_iter, res),
                n_iter=i_iter, residual_norm=res, reason='line_search'
            )
        alpha, z, L, res = accepted
        if res < tol:
            return AlphaPair.from_stacked(alpha, r1, i_iter, res)

    return NoConvergence(
        best=AlphaPair.from_stacked(alpha, r1, maxit, res),
        n_iter=maxit, residual_norm=res
    )
