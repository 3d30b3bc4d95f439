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
"""Module for splitting a compact representation by sign.

Classes:
    SpectralSplit: Factors `U1`, `U2` with
        `A Q^{-1} A^T = U1 U1^T - U2 U2^T`.
    SpectralSplitError: Raised when the eigendecomposition fails.

Functions:
    eigensplit: Compute the split of a `CompactRep`.

"""

import dataclasses

import numpy as np
import scipy.linalg


class SpectralSplitError(ArithmeticError):
    """The eigendecomposition of the middle matrix failed."""


@dataclasses.dataclass(frozen=True, eq=False)
class SpectralSplit(object):
    """Low-rank correction split into positive and negative parts.

    Attributes:
        U1: An (n, r1) array.
        U2: An (n, r2) array.
        dropped: Number of eigenvalues of `Q` discarded as
            ill-conditioned.

    """

    U1: np.ndarray
    U2: np.ndarray
    dropped: int = 0

    @property
    def r1(self):
        return self.U1.shape[1]

    @property
    def r2(self):
        return self.U2.shape[1]

    @classmethod
    def empty(cls, n):
        """Return the split of the zero correction."""
        return cls(U1=np.zeros([n, 0]), U2=np.zeros([n, 0]), dropped=0)

    def apply(self, gamma, v):
        """Return `(gamma I + U1 U1^T - U2 U2^T) v`."""
        v = np.asarray(v, dtype=float)
        return (
            gamma * v + self.U1 @ (self.U1.T @ v)
            - self.U2 @ (self.U2.T @ v)
        )


def eigensplit(rep, eps=1e-8):
    """Split the correction `A Q^{-1} A^T` of a compact representation.

    With `Q = V diag(lam) V^T`, eigenpairs with
    `|lam| <= eps * max|lam|` are dropped, `U1` collects
    `A v / sqrt(lam)` over positive `lam` and `U2` collects
    `A v / sqrt(-lam)` over negative `lam`. The entries of `Q` scale
    with the squared step length, hence the relative cut.

    Arguments:
        rep: A `CompactRep`.
        eps (optional): The positive drop tolerance, relative to the
            largest eigenvalue magnitude.

    Returns:
        A `SpectralSplit`.

    Raises:
        SpectralSplitError: If `Q` is not finite or the
            eigendecomposition does not converge.

    """
    if eps <= 0:
        raise ValueError("The argument `eps` must be positive.")
    if rep.size == 0:
        return SpectralSplit.empty(rep.dim)
    if not np.all(np.isfinite(rep.Q)) or not np.all(np.isfinite(rep.A)):
        raise SpectralSplitError("The compact representation is not finite.")
    try:
        lam, V = scipy.linalg.eigh(rep.Q)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise SpectralSplitError(
            "Eigendecomposition of the middle matrix failed: {0}".format(e)
        ) from e
    AV = rep.A @ V
    cut = eps * float(np.max(np.abs(lam)))
    positive = lam > cut
    negative = lam < -cut
    return SpectralSplit(
        U1=AV[:, positive] / np.sqrt(lam[positive]),
        U2=AV[:, negative] / np.sqrt(-lam[negative]),
        dropped=int(rep.size - np.sum(positive) - np.sum(negative))
    )
