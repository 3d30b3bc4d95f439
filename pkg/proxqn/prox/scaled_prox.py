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
"""Module for scaled proximity operators.

Classes:
    ScaledProxContext: A regularizer paired with a scalar metric.

Functions:
    prox_scaled: Evaluate the proximity operator in the metric
        `gamma_hat * I`.
    prox_newton_derivative_apply: Apply a Newton derivative of
        `prox_scaled`.

"""

import dataclasses

import numpy as np

from proxqn.problems.regularizer import RegularizerKind


@dataclasses.dataclass(frozen=True)
class ScaledProxContext(object):
    """A regularizer together with the scalar metric `gamma_hat * I`.

    Attributes:
        spec: A `RegularizerSpec`.
        gamma_hat: A positive scalar.
        counter (optional): An `EvalCounter` incremented on every
            proximity operator evaluation.

    """

    spec: object
    gamma_hat: float
    counter: object = dataclasses.field(default=None, compare=False)

    def __post_init__(self):
        if not np.isfinite(self.gamma_hat) or self.gamma_hat <= 0:
            raise ValueError(
                "The argument `gamma_hat` must be a positive real number."
            )

    @property
    def threshold(self):
        """Return the shrinkage threshold `lam / gamma_hat`."""
        return self.spec.lam / self.gamma_hat


def prox_scaled(ctx, x):
    """Evaluate `argmin_y phi(y) + (gamma_hat / 2) ||y - x||^2`.

    Arguments:
        ctx: A `ScaledProxContext`.
        x: A 1D array.

    Returns:
        A 1D array.

    """
    if ctx.counter is not None:
        ctx.counter.prox_evals += 1
    x = np.asarray(x, dtype=float)
    kind = ctx.spec.kind
    if kind is RegularizerKind.ZERO:
        return x.copy()
    t = ctx.threshold
    if kind is RegularizerKind.L1:
        return np.sign(x) * np.maximum(np.abs(x) - t, 0.)

    norms = ctx.spec.group_norms(x)
    shrink = np.zeros_like(norms)
    positive = norms > t
    shrink[positive] = 1. - t / norms[positive]
    return x * shrink[ctx.spec.group_ids]


def prox_newton_derivative_apply(ctx, x, v):
    """Apply a Newton derivative `P(x)` of `prox_scaled` to `v`.

    For the l1 norm `P(x)` is diagonal with ones where
    `|x_i| >= threshold`. For the group norm each block is
    `(1 - t/||x_g||) I + (t/||x_g||^3) x_g x_g^T` when
    `||x_g|| >= t` and zero otherwise. The matrix is never formed.

    Arguments:
        ctx: A `ScaledProxContext`.
        x: A 1D array of length n.
        v: An array of shape (n,) or (n, k). For the latter the
            derivative is applied to every column.

    Returns:
        An array with the shape of `v`.

    """
    x = np.asarray(x, dtype=float)
    v = np.asarray(v, dtype=float)
    kind = ctx.spec.kind
    if kind is RegularizerKind.ZERO:
        return v.copy()
    t = ctx.threshold
    if kind is RegularizerKind.L1:
        active = (np.abs(x) >= t).astype(float)
        if v.ndim == 2:
            active = active[:, np.newaxis]
        return active * v

    spec = ctx.spec
    norms = ctx.spec.group_norms(x)
    active = (norms >= t) & (norms > 0)
    diag = np.zeros_like(norms)
    rank_one = np.zeros_like(norms)
    diag[active] = 1. - t / norms[active]
    rank_one[active] = t / norms[active]**3
    ids = spec.group_ids
    if v.ndim == 1:
        dots = spec.membership @ (x * v)
        return diag[ids] * v + rank_one[ids] * x * dots[ids]
    dots = spec.membership @ (x[:, np.newaxis] * v)
    return (
        diag[ids][:, np.newaxis] * v
        + (rank_one[ids] * x)[:, np.newaxis] * dots[ids]
    )
