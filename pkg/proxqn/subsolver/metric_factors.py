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
"""Module for factored variable metrics.

Classes:
    MetricFactors: Cached factors of
        `B_hat = gamma_hat I + U1 U1^T - U2 U2^T`.
    NotPositiveDefinite: Returned when `B_hat` is not positive
        definite.

Functions:
    factor_metric: Factor the metric of a spectral split.
    apply_B1_inv: Apply `(gamma_hat I + U1 U1^T)^{-1}`.
    apply_B_inv: Apply `B_hat^{-1}`.

"""

import dataclasses

import numpy as np
import scipy.linalg

# Smallest admissible ratio of the smallest to the largest squared
# Cholesky pivot of `I - U2^T B1^{-1} U2`.
PIVOT_RTOL = 1e-12


@dataclasses.dataclass(frozen=True)
class NotPositiveDefinite(object):
    """Outcome of `factor_metric` when `B_hat` is not positive definite.

    Attributes:
        gamma_hat: The scalar part of the metric.
        min_pivot: The smallest squared Cholesky pivot encountered
            (`-inf` if the factorization broke down).

    """

    gamma_hat: float
    min_pivot: float = -np.inf


@dataclasses.dataclass(frozen=True, eq=False)
class MetricFactors(object):
    """Factors of `B_hat = gamma_hat I + U1 U1^T - U2 U2^T`.

    Attributes:
        gamma_hat: Positive scalar `gamma + mu`.
        U1: An (n, r1) array.
        U2: An (n, r2) array.
        chol1: Cholesky factor of `I + U1^T U1 / gamma_hat` (None if
            r1 = 0).
        chol2: Cholesky factor of `I - U2^T W` (None if r2 = 0).
        W: The (n, r2) array `B1^{-1} U2`.
        cross: The (r1, r2) array `U1^T W`.

    """

    gamma_hat: float
    U1: np.ndarray
    U2: np.ndarray
    chol1: tuple
    chol2: tuple
    W: np.ndarray
    cross: np.ndarray

    @property
    def r1(self):
        return self.U1.shape[1]

    @property
    def r2(self):
        return self.U2.shape[1]

    @property
    def dim(self):
        return self.U1.shape[0]

    def apply(self, v):
        """Return `B_hat v`."""
        v = np.asarray(v, dtype=float)
        return (
            self.gamma_hat * v + self.U1 @ (self.U1.T @ v)
            - self.U2 @ (self.U2.T @ v)
        )


def _b1_inv(gamma_hat, U1, chol1, v):
    out = v / gamma_hat
    if chol1 is not None:
        correction = scipy.linalg.cho_solve(chol1, U1.T @ v)
        out = out - U1 @ correction / gamma_hat**2
    return out


def factor_metric(split, gamma, mu):
    """Factor the metric `(gamma + mu) I + U1 U1^T - U2 U2^T`.

    Arguments:
        split: A `SpectralSplit`.
        gamma: The scaling of the initial quasi-Newton matrix.
        mu: The regularization parameter.

    Returns:
        A `MetricFactors` object, or `NotPositiveDefinite` if the
        Cholesky factorization of `I - U2^T B1^{-1} U2` fails or its
        smallest squared pivot is at most `PIVOT_RTOL` times the
        largest.

    Raises:
        ValueError: If `gamma + mu` is not positive.

    """
    gamma_hat = float(gamma + mu)
    if not gamma_hat > 0:
        raise ValueError(
            "The sum `gamma + mu` must be positive, got {0}.".format(gamma_hat)
        )
    U1 = split.U1
    U2 = split.U2
    r1 = U1.shape[1]
    r2 = U2.shape[1]

    chol1 = None
    if r1 > 0:
        M1 = np.eye(r1) + (U1.T @ U1) / gamma_hat
        chol1 = scipy.linalg.cho_factor(M1, lower=True)

    W = _b1_inv(gamma_hat, U1, chol1, U2)
    cross = U1.T @ W
    chol2 = None
    if r2 > 0:
        M2 = np.eye(r2) - U2.T @ W
        M2 = .5 * (M2 + M2.T)
        try:
            chol2 = scipy.linalg.cho_factor(M2, lower=True)
        except (np.linalg.LinAlgError, ValueError):
            return NotPositiveDefinite(gamma_hat=gamma_hat)
        pivots = np.diag(chol2[0])**2
        min_pivot = float(np.min(pivots))
        if not min_pivot > PIVOT_RTOL * float(np.max(pivots)):
            return NotPositiveDefinite(
                gamma_hat=gamma_hat, min_pivot=min_pivot
            )

    return MetricFactors(
        gamma_hat=gamma_hat, U1=U1, U2=U2, chol1=chol1, chol2=chol2, W=W,
        cross=cross
    )


def apply_B1_inv(fac, v):
    """Return `(gamma_hat I + U1 U1^T)^{-1} v` for a vector or block."""
    v = np.asarray(v, dtype=float)
    return _b1_inv(fac.gamma_hat, fac.U1, fac.chol1, v)


def apply_B_inv(fac, v):
    """Return `B_hat^{-1} v` for a vector or block."""
    v = np.asarray(v, dtype=float)
    out = apply_B1_inv(fac, v)
    if fac.chol2 is not None:
        out = out + fac.W @ scipy.linalg.cho_solve(fac.chol2, fac.W.T @ v)
    return out
