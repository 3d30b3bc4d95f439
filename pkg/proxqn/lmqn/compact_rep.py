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
"""Module for compact limited-memory quasi-Newton matrices.

Classes:
    CompactRep: The matrix `B = gamma I + A Q^{-1} A^T`.
    SingularMiddleMatrixError: Raised when `Q` cannot be factored.

Functions:
    build_compact: Assemble the compact form from a pair buffer.
    apply_B: Multiply by `B` without forming it.

"""

import dataclasses
import functools
import warnings

import numpy as np
import scipy.linalg

from proxqn.lmqn.pair_buffer import QuasiNewtonKind


class SingularMiddleMatrixError(ArithmeticError):
    """The middle matrix `Q` of a compact representation is singular."""


@dataclasses.dataclass(frozen=True, eq=False)
class CompactRep(object):
    """Compact representation `B = gamma I + A Q^{-1} A^T`.

    Attributes:
        gamma: Positive scaling of the initial matrix.
        A: An (n, s) array.
        Q: A symmetric (s, s) array.
        kind: A `QuasiNewtonKind`.

    """

    gamma: float
    A: np.ndarray
    Q: np.ndarray
    kind: QuasiNewtonKind

    @property
    def dim(self):
        """Return n."""
        return self.A.shape[0]

    @property
    def size(self):
        """Return s, the order of `Q`."""
        return self.Q.shape[0]

    @functools.cached_property
    def lu(self):
        """Return the LU factorization of `Q`."""
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', scipy.linalg.LinAlgWarning)
            lu, piv = scipy.linalg.lu_factor(self.Q)
        pivots = np.abs(np.diag(lu))
        scale = max(1., float(np.max(np.abs(self.Q))))
        if not np.all(np.isfinite(lu)) or np.min(pivots) <= 1e-14 * scale:
            raise SingularMiddleMatrixError(
                "The middle matrix `Q` is numerically singular; use the "
                "spectral split instead."
            )
        return lu, piv


def build_compact(buf, gamma, kind):
    """Assemble the compact representation from stored pairs.

    With `S`, `Y` holding the pairs oldest first, `D = diag(S^T Y)` and
    `L` the strictly lower triangle of `S^T Y`:
    BFGS uses `A = [gamma S, Y]`, `Q = [[-gamma S^T S, -L], [-L^T, D]]`;
    SR1 uses `A = Y - gamma S`, `Q = D + L + L^T - gamma S^T S`.

    Arguments:
        buf: A `PairBuffer`.
        gamma: A positive scalar.
        kind: A `QuasiNewtonKind`.

    Returns:
        A `CompactRep`. An empty buffer gives `Q` of order zero, i.e.,
        `B = gamma I`.

    """
    if not gamma > 0:
        raise ValueError("The argument `gamma` must be positive.")
    kind = QuasiNewtonKind(kind)
    S = buf.S()
    Y = buf.Y()
    if S.shape[1] == 0:
        n = S.shape[0]
        return CompactRep(
            gamma=float(gamma), A=np.zeros([n, 0]), Q=np.zeros([0, 0]),
            kind=kind
        )
    SY = S.T @ Y
    D = np.diag(np.diag(SY))
    L = np.tril(SY, k=-1)
    SS = S.T @ S
    if kind is QuasiNewtonKind.BFGS:
        A = np.hstack([gamma * S, Y])
        Q = np.block([[-gamma * SS, -L], [-L.T, D]])
    else:
        A = Y - gamma * S
        Q = D + L + L.T - gamma * SS
    return CompactRep(gamma=float(gamma), A=A, Q=Q, kind=kind)


def apply_B(rep, v):
    """Return `B v` for a vector or a column block `v`.

    Raises:
        SingularMiddleMatrixError: If `Q` is singular.

    """
    v = np.asarray(v, dtype=float)
    if rep.size == 0:
        return rep.gamma * v
    return rep.gamma * v + rep.A @ scipy.linalg.lu_solve(rep.lu, rep.A.T @ v)
