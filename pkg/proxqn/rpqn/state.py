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
"""Module for the state of the regularized proximal quasi-Newton solver.

Classes:
    RpqnState: Current iterate with cached oracle values.

"""

import dataclasses
import time

import numpy as np

from proxqn.lmqn.pair_buffer import PairBuffer
from proxqn.rpqn.stationarity import residual


@dataclasses.dataclass(frozen=True, eq=False)
class RpqnState(object):
    """Solver state at iterate `x^k`.

    The cached values `f`, `phi`, `psi`, `grad` and `res_norm` always
    refer to `x`. The pair buffer is owned by the run and shared
    between successive states.

    Attributes:
        x: The iterate.
        mu: The regularization parameter.
        buffer: A `PairBuffer`.
        gamma: Scaling of the initial quasi-Newton matrix.
        k: The iteration index.
        f: `f(x)`.
        phi: `phi(x)`.
        grad: The gradient of `f` at `x`.
        res_norm: `||r(x)||`.
        time_s: Seconds since the start of the run when `x` became the
            current iterate.
        counts: Evaluation counters at that time.

    """

    x: np.ndarray
    mu: float
    buffer: PairBuffer
    gamma: float
    k: int
    f: float
    phi: float
    grad: np.ndarray
    res_norm: float
    time_s: float = 0.
    counts: dict = dataclasses.field(default_factory=dict)

    @property
    def psi(self):
        """Return `f(x) + phi(x)`."""
        return self.f + self.phi

    @classmethod
    def initial(cls, problem, x0, config, start_time=None):
        """Create the state of iteration zero.

        Arguments:
            problem: A `CompositeProblem`.
            x0: The start point.
            config: An `RpqnConfig`.
            start_time (optional): The `time.perf_counter` value at
                the start of the run.

        """
        if start_time is None:
            start_time = time.perf_counter()
        x = np.array(x0, dtype=float)
        grad = problem.grad(x)
        f = problem.f(x)
        res_norm = float(np.linalg.norm(residual(problem, x, grad)))
        return cls(
            x=x, mu=float(config.mu0),
            buffer=PairBuffer(config.memory, dim=problem.dim), gamma=1.,
            k=0, f=f, phi=problem.phi(x), grad=grad, res_norm=res_norm,
            time_s=time.perf_counter() - start_time,
            counts=problem.counter.snapshot()
        )
