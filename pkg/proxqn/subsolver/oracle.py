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
"""Module for a dense reference proximity operator.

Functions:
    oracle_prox_dense: Evaluate `prox_phi^H(y)` for a dense SPD `H` by
        accelerated proximal gradient iterations.

"""

import warnings

import numpy as np

from proxqn.prox.scaled_prox import ScaledProxContext
from proxqn.prox.scaled_prox import prox_scaled


def oracle_prox_dense(H, spec, y, tol=1e-12, max_iter=200000):
    """Evaluate `argmin_u phi(u) + 1/2 (u - y)^T H (u - y)`.

    The objective is strongly convex, so proximal gradient steps of
    length `1 / lambda_max(H)` with constant momentum
    `(sqrt(kappa) - 1) / (sqrt(kappa) + 1)` converge linearly. The
    iteration stops once the fixed-point residual
    `||prox(u - H (u - y) / Lip) - u||` drops below `tol`.

    Intended for small reference computations (n of a few dozen).

    Arguments:
        H: A dense symmetric positive definite (n, n) array.
        spec: A `RegularizerSpec`.
        y: The prox argument.
        tol (optional): Fixed-point residual tolerance.
        max_iter (optional): Iteration limit.

    Returns:
        u: The proximity operator value.

    """
    H = np.asarray(H, dtype=float)
    y = np.asarray(y, dtype=float)
    eig = np.linalg.eigvalsh(.5 * (H + H.T))
    if eig[0] <= 0:
        raise ValueError("The argument `H` must be positive definite.")
    lip = float(eig[-1])
    root_kappa = np.sqrt(lip / eig[0])
    beta = (root_kappa - 1.) / (root_kappa + 1.)
    ctx = ScaledProxContext(spec=spec, gamma_hat=lip)

    u = y.copy()
    v = u
    for _ in range(max_iter):
        u_new = prox_scaled(ctx, v - H @ (v - y) / lip)
        v = u_new + beta * (u_new - u)
        u = u_new
        fixed_point = prox_scaled(ctx, u - H @ (u - y) / lip) - u
        if np.linalg.norm(fixed_point) < tol:
            return u + fixed_point
    warnings.warn(
        "The dense reference prox did not reach the tolerance {0} in {1} "
        "iterations.".format(tol, max_iter)
    )
    return u
