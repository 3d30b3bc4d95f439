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
"""Module for the robust image restoration problem family.

Classes:
    RestorationData: True image, observation and operator settings.

Functions:
    synthetic_image: A deterministic piecewise-constant test image.
    make_student_t_restoration: Seeded deblurring instance with a
        Student-t type loss, posed in Haar wavelet coordinates.

"""

import dataclasses

import numpy as np

from proxqn.problems.blur import gaussian_blur_apply
from proxqn.problems.blur import gaussian_kernel
from proxqn.problems.composite_problem import CompositeProblem
from proxqn.problems.haar import haar2d
from proxqn.problems.random_state import make_rng
from proxqn.problems.regularizer import RegularizerSpec
from proxqn.problems.regularizer import eval_regularizer
from proxqn.problems.smooth import StudentTSmooth


@dataclasses.dataclass(frozen=True, eq=False)
class RestorationData(object):
    """Data of a restoration instance.

    Attributes:
        true_image: The noise-free image (side x side).
        observed: The blurred, noisy image (side x side).
        side: The image side.
        levels: Haar decomposition levels.
        kernel: The blur kernel.

    """

    true_image: np.ndarray
    observed: np.ndarray
    side: int
    levels: int = 4
    kernel: np.ndarray = None


def synthetic_image(side):
    """Return a piecewise-constant test image with values in [0, 1].

    Arguments:
        side: The image side.

    Returns:
        image: A `side` x `side` array.

    """
    u, v = np.meshgrid(
        (np.arange(side) + .5) / side, (np.arange(side) + .5) / side,
        indexing='ij'
    )
    image = np.full([side, side], .1)
    image[(u > .15) & (u < .55) & (v > .2) & (v < .7)] = .7
    image[(u - .65)**2 + (v - .6)**2 < .22**2] = .45
    image[(u > .7) & (u < .85) & (v > .1) & (v < .3)] = .95
    return image


def _is_power_of_two(side):
    return side >= 1 and (side & (side - 1)) == 0


def make_student_t_restoration(
        seed, side=32, lam=1e-4, noise_scale=1e-3, levels=4):
    """Create a seeded robust deblurring instance.

    The observation is `b = A x_true + noise_scale * t`, where `A` is
    the 9 x 9 Gaussian blur with standard deviation 4 and `t` has a
    Student-t distribution with one degree of freedom. The problem is
    posed in Haar coordinates `y = W x` so that the regularizer
    `lam * ||y||_1` is separable.

    Arguments:
        seed: A non-negative integer.
        side (optional): The image side, a power of two >= 16.
        lam (optional): The positive weight of the l1 term.
        noise_scale (optional): The noise magnitude.
        levels (optional): Haar decomposition levels.

    Returns:
        problem: A `CompositeProblem` whose start point is the Haar
            transform of the observed image. `problem.data` holds the
            `RestorationData` and `problem.metadata['psi_reference']`
            the objective value at the true image.

    Raises:
        ValueError: If `side` is not a power of two >= 16.

    """
    if not (_is_power_of_two(side) and side >= 16):
        raise ValueError(
            "The argument `side` must be a power of two >= 16, got "
            "{0}.".format(side)
        )
    if noise_scale < 0:
        raise ValueError("The argument `noise_scale` must be non-negative.")
    rng = make_rng(seed)
    kernel = gaussian_kernel()
    true_image = synthetic_image(side)
    noise = noise_scale * rng.standard_t(1, size=side * side)
    observed = gaussian_blur_apply(true_image.ravel(), side, kernel) + noise
    observed = observed.reshape(side, side)

    data = RestorationData(
        true_image=true_image, observed=observed, side=side, levels=levels,
        kernel=kernel
    )
    smooth = StudentTSmooth(observed.ravel(), side, levels, kernel)
    spec = RegularizerSpec.l1(lam)
    y_true = haar2d(true_image, levels=levels)
    psi_reference = smooth.value(y_true) + eval_regularizer(spec, y_true)
    metadata = {
        'family': 'student-t', 'seed': int(seed),
        'scale': {
            'side': int(side), 'lambda': float(lam),
            'noise_scale': float(noise_scale)
        },
        'psi_reference': float(psi_reference),
    }
    return CompositeProblem(
        smooth=smooth, nonsmooth=spec, dim=side * side,
        x0=haar2d(observed, levels=levels), data=data, metadata=metadata
    )
