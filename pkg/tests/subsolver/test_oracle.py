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
"""Module for testing oracle.py."""

import numpy as np
import pytest

from proxqn.problems import RegularizerSpec
from proxqn.subsolver import oracle_prox_dense


def random_spd(rng, n, low=1., high=10.):
    Q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    return Q @ np.diag(rng.uniform(low, high, size=n)) @ Q.T


def coordinate_descent_l1(H, lam, y, tol=1e-12, max_sweep=100000):
    """Minimize `lam ||u||_1 + 1/2 (u - y)^T H (u - y)` coordinatewise."""
    u = y.copy()
    for _ in range(max_sweep):
        change = 0.
        for i in range(y.size):
            off = H[i] @ (u - y) - H[i, i] * (u[i] - y[i])
            c = y[i] - off / H[i, i]
            t = lam / H[i, i]
            new = np.sign(c) * max(abs(c) - t, 0.)
            change = max(change, abs(new - u[i]))
            u[i] = new
        if change < tol:
            break
    return u


def test_scalar_metric():
    """Test that `H = c I` reduces to soft thresholding."""
    y = np.array([2., -.1, -3.])
    u = oracle_prox_dense(4. * np.eye(3), RegularizerSpec.l1(2.), y)
    np.testing.assert_allclose(u, np.array([1.5, 0., -2.5]), atol=1e-12)


def test_matches_coordinate_descent():
    rng = np.random.default_rng(3)
    for _ in range(5):
        n = 12
        H = random_spd(rng, n)
        y = rng.standard_normal(n)
        lam = float(rng.uniform(.1, 1.))
        np.testing.assert_allclose(
            oracle_prox_dense(H, RegularizerSpec.l1(lam), y),
            coordinate_descent_l1(H, lam, y), atol=1e-9
        )


def test_not_positive_definite():
    with pytest.raises(ValueError) as e_info:
        oracle_prox_dense(-np.eye(2), RegularizerSpec.l1(1.), np.ones(2))
    assert str(e_info.value) == "The argument `H` must be positive definite."


def test_residual_bound_between_metrics():
    """Test how the residual changes with the metric.

    With `r_H(x) = x - prox_phi^H(x - H^{-1} g)`, a second metric `K`
    satisfies `||r_K|| <= (1 + max(K) / min(H)) (max(H) / min(K))
    ||r_H||` in terms of extreme eigenvalues.

    """
    rng = np.random.default_rng(4)
    for _ in range(100):
        n = int(rng.integers(2, 11))
        H = random_spd(rng, n, .5, 5.)
        K = random_spd(rng, n, .5, 5.)
        x = rng.standard_normal(n)
        g = rng.standard_normal(n)
        spec = RegularizerSpec.l1(float(rng.uniform(.1, 1.)))

        def residual(M):
            return x - oracle_prox_dense(M, spec, x - np.linalg.solve(M, g))

        eig_H = np.linalg.eigvalsh(H)
        eig_K = np.linalg.eigvalsh(K)
        bound = (
            (1. + eig_K[-1] / eig_H[0]) * (eig_H[-1] / eig_K[0])
            * np.linalg.norm(residual(H))
        )
        assert np.linalg.norm(residual(K)) <= bound + 1e-9
