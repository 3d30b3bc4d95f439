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
"""Module for smooth-part oracles.

Classes:
    SmoothOracle: Abstract base class for the smooth part `f`.
    FunctionSmooth: Oracle wrapping user-supplied callables.
    LeastSquaresSmooth: `f(x) = 1/2 ||Ax - b||^2` for dense `A`.
    StudentTSmooth: `f(y) = sum_i log((K y - b)_i^2 + 1)` where `K` is
        a Gaussian blur composed with an inverse Haar transform.

"""

from abc import ABCMeta, abstractmethod

import numpy as np

from proxqn.problems.blur import gaussian_blur_adjoint
from proxqn.problems.blur import gaussian_blur_apply
from proxqn.problems.blur import gaussian_kernel
from proxqn.problems.haar import haar2d
from proxqn.problems.haar import haar2d_inverse


class SmoothOracle(metaclass=ABCMeta):
    """Abstract base class for the smooth part of a composite problem.

    Attributes:
        dim: The number of variables.
        matvecs_per_value: Applications of the forward operator made
            by one call to `value`.
        matvecs_per_gradient: Applications of the forward operator or
            its adjoint made by one call to `gradient`.

    """

    matvecs_per_value = 0
    matvecs_per_gradient = 0

    def __init__(self, dim):
        """Initialize.

        Arguments:
            dim: The number of variables.

        """
        if dim < 1:
            raise ValueError("The argument `dim` must be positive.")
        self.dim = int(dim)

    @abstractmethod
    def value(self, x):
        """Return `f(x)`."""

    @abstractmethod
    def gradient(self, x):
        """Return the gradient of `f` at `x`."""


class FunctionSmooth(SmoothOracle):
    """Smooth part given by a pair of callables."""

    def __init__(self, value_fn, gradient_fn, dim):
        """Initialize.

        Arguments:
            value_fn: Callable returning `f(x)`.
            gradient_fn: Callable returning the gradient at `x`.
            dim: The number of variables.

        """
        super().__init__(dim)
        self._value_fn = value_fn
        self._gradient_fn = gradient_fn

    def value(self, x):
        return float(self._value_fn(x))

    def gradient(self, x):
        return np.asarray(self._gradient_fn(x), dtype=float)


class LeastSquaresSmooth(SmoothOracle):
    """Dense least squares loss `1/2 ||Ax - b||^2`."""

    matvecs_per_value = 1
    matvecs_per_gradient = 2

    def __init__(self, data):
        """Initialize.

        Arguments:
            data: A `DenseLeastSquaresData` object.

        """
        super().__init__(data.n)
        self.A = data.A
        self.b = data.b

    def value(self, x):
        r = self.A @ x - self.b
        return .5 * float(r @ r)

    def gradient(self, x):
        return self.A.T @ (self.A @ x - self.b)


class StudentTSmooth(SmoothOracle):
    """Student-t type robust loss in Haar wavelet coordinates.

    With `K = A W^T`, where `A` blurs and `W^T` reconstructs an image
    from its Haar coefficients, the loss is
    `f(y) = sum_i log((K y - b)_i^2 + 1)`.

    """

    matvecs_per_value = 1
    matvecs_per_gradient = 2

    def __init__(self, observed, side, levels=4, kernel=None):
        """Initialize.

        Arguments:
            observed: The observed (blurred, noisy) image as a 1D
                array of length `side**2`.
            side: The image side.
            levels (optional): Haar decomposition levels.
            kernel (optional): The blur kernel. Defaults to the 9 x 9
                Gaussian with standard deviation 4.

        """
        super().__init__(side * side)
        self.observed = np.asarray(observed, dtype=float).ravel()
        self.side = int(side)
        self.levels = int(levels)
        if kernel is None:
            kernel = gaussian_kernel()
        self.kernel = kernel

    def forward(self, y):
        """Return `K y`."""
        image = haar2d_inverse(y, side=self.side, levels=self.levels)
        return gaussian_blur_apply(image.ravel(), self.side, self.kernel)

    def adjoint(self, u):
        """Return `K^T u`."""
        image = gaussian_blur_adjoint(u, self.side, self.kernel)
        return haar2d(image.reshape(self.side, self.side), levels=self.levels)

    def value(self, x):
        r = self.forward(x) - self.observed
        return float(np.sum(np.log1p(r * r)))

    def gradient(self, x):
        r = self.forward(x) - self.observed
        return self.adjoint(2. * r / (r * r + 1.))
