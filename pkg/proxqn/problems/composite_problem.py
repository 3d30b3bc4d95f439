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
"""Module for composite optimization problems.

Classes:
    CompositeProblem: A smooth oracle paired with a regularizer.

Functions:
    eval_objective: Evaluate `psi = f + phi` at a point.

"""

import dataclasses

import numpy as np

from proxqn.problems.regularizer import eval_regularizer
from proxqn.utils.eval_counter import EvalCounter


@dataclasses.dataclass(frozen=True, eq=False)
class CompositeProblem(object):
    """The problem `min_x psi(x) = f(x) + phi(x)`.

    Every evaluation of `f` or its gradient made through this object is
    tallied in `counter`; solvers never call the smooth oracle
    directly.

    Attributes:
        smooth: A `SmoothOracle`.
        nonsmooth: A `RegularizerSpec`.
        dim: The number of variables.
        x0: The default start point (zeros if not given).
        data: The generating data (e.g., `DenseLeastSquaresData`), if
            any.
        metadata: A dictionary of descriptive values (family, seed,
            reference objective value, ...).
        counter: An `EvalCounter`.

    """

    smooth: object
    nonsmooth: object
    dim: int
    x0: np.ndarray = None
    data: object = None
    metadata: dict = dataclasses.field(default_factory=dict)
    counter: EvalCounter = dataclasses.field(default_factory=EvalCounter)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("The argument `dim` must be positive.")
        if self.smooth.dim != self.dim:
            raise ValueError(
                "The smooth part has dimension {0}, but `dim` is "
                "{1}.".format(self.smooth.dim, self.dim)
            )
        self.nonsmooth.check_dim(self.dim)
        if self.x0 is None:
            object.__setattr__(self, 'x0', np.zeros([self.dim]))
        else:
            object.__setattr__(
                self, 'x0', self._check_point(self.x0).copy()
            )

    def _check_point(self, x):
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise ValueError(
                "Expected a point of shape ({0},), got {1}.".format(
                    self.dim, x.shape
                )
            )
        return x

    def f(self, x):
        """Return `f(x)`."""
        x = self._check_point(x)
        self.counter.f_evals += 1
        self.counter.matvecs += self.smooth.matvecs_per_value
        return self.smooth.value(x)

    def grad(self, x):
        """Return the gradient of `f` at `x`."""
        x = self._check_point(x)
        self.counter.g_evals += 1
        self.counter.matvecs += self.smooth.matvecs_per_gradient
        return self.smooth.gradient(x)

    def phi(self, x):
        """Return `phi(x)`."""
        return eval_regularizer(self.nonsmooth, self._check_point(x))

    def psi(self, x):
        """Return `f(x) + phi(x)`."""
        return self.f(x) + self.phi(x)

    def with_x0(self, x0):
        """Return a copy with a different start point and a new counter."""
        return dataclasses.replace(self, x0=x0, counter=EvalCounter())


def eval_objective(problem, x):
    """Evaluate the composite objective.

    Arguments:
        problem: A `CompositeProblem`.
        x: A 1D array of length `problem.dim`.

    Returns:
        The value `f(x) + phi(x)`.

    Raises:
        ValueError: If `x` has the wrong shape.

    """
    return problem.psi(x)
