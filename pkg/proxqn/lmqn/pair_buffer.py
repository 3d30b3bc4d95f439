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
"""Module for limited-memory curvature pair storage.

Classes:
    QuasiNewtonKind: The quasi-Newton update family.
    PushResult: Outcome of offering a pair to the buffer.
    PairBuffer: First-in-first-out store of `(s, y)` pairs.

Functions:
    push_pair: Offer a pair to a buffer, applying the skip rules.
    gamma_init: Scaling of the initial matrix from the newest pair.

"""

import collections
import enum

import numpy as np


class QuasiNewtonKind(enum.Enum):
    """Quasi-Newton update family."""

    BFGS = 'bfgs'
    SR1 = 'sr1'


class PushResult(enum.Enum):
    """Outcome of `push_pair`."""

    ACCEPTED = 'accepted'
    SKIPPED = 'skipped'


class PairBuffer(object):
    """First-in-first-out store of at most `memory` curvature pairs.

    Attributes:
        memory: The capacity.
        dim: The vector length (fixed by the first stored pair unless
            given).

    Methods:
        S: The (dim, s) matrix of steps, oldest column first.
        Y: The (dim, s) matrix of gradient differences.
        clear: Remove all pairs.

    """

    def __init__(self, memory, dim=None):
        """Initialize.

        Arguments:
            memory: A non-negative integer capacity.
            dim (optional): The vector length.

        """
        if int(memory) != memory or memory < 0:
            raise ValueError(
                "The argument `memory` must be a non-negative integer."
            )
        self.memory = int(memory)
        self.dim = dim
        self._pairs = collections.deque(maxlen=self.memory)

    def __len__(self):
        return len(self._pairs)

    @property
    def pairs(self):
        """Return the stored pairs, oldest first."""
        return list(self._pairs)

    def _stack(self, index):
        if not self._pairs:
            n = 0 if self.dim is None else self.dim
            return np.zeros([n, 0])
        return np.column_stack([pair[index] for pair in self._pairs])

    def S(self):
        """Return the step matrix."""
        return self._stack(0)

    def Y(self):
        """Return the gradient difference matrix."""
        return self._stack(1)

    def clear(self):
        """Remove all pairs."""
        self._pairs.clear()

    def append(self, s, y):
        """Store a pair without any checks (oldest evicted at capacity)."""
        if self.memory == 0:
            return
        if self.dim is None:
            self.dim = s.shape[0]
        self._pairs.append(
            (np.array(s, dtype=float), np.array(y, dtype=float))
        )


def push_pair(buf, s, y, kind, eps=1e-8):
    """Offer a curvature pair to a buffer.

    A zero step is always skipped. BFGS pairs are skipped when
    `s^T y < eps ||s||^2`. SR1 pairs are always stored since
    ill-conditioned directions are removed when the compact
    representation is split.

    Arguments:
        buf: A `PairBuffer`.
        s: The step.
        y: The gradient difference.
        kind: A `QuasiNewtonKind`.
        eps (optional): The positive skip tolerance.

    Returns:
        A `PushResult`.

    Raises:
        ValueError: If the dimensions are inconsistent.

    """
    s = np.asarray(s, dtype=float)
    y = np.asarray(y, dtype=float)
    if eps <= 0:
        raise ValueError("The argument `eps` must be positive.")
    if s.ndim != 1 or s.shape != y.shape:
        raise ValueError(
            "The arguments `s` and `y` must be 1D arrays of equal length."
        )
    if buf.dim is not None and s.shape[0] != buf.dim:
        raise ValueError(
            "The buffer holds vectors of length {0}, got {1}.".format(
                buf.dim, s.shape[0]
            )
        )
    ss = float(s @ s)
    if ss == 0. or buf.memory == 0:
        return PushResult.SKIPPED
    if QuasiNewtonKind(kind) is QuasiNewtonKind.BFGS:
        if float(s @ y) < eps * ss:
            return PushResult.SKIPPED
    buf.append(s, y)
    return PushResult.ACCEPTED


def gamma_init(s, y, fallback=1.):
    """Return `y^T y / s^T y`, or `fallback` if `s^T y <= 0`."""
    sy = float(np.dot(s, y))
    if sy > 0:
        return float(np.dot(y, y)) / sy
    return fallback
