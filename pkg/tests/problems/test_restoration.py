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
"""Module for testing restoration.py."""

import numpy as np
import pytest

from proxqn.problems import eval_objective
from proxqn.problems import haar2d
from proxqn.problems import make_student_t_restoration
from proxqn.problems import synthetic_image


@pytest.fixture(scope="module")
def restoration():
    return make_student_t_restoration(seed=1, side=16)


def test_dimensions(restoration):
    assert restoration.dim == 256
    assert restoration.data.observed.shape == (16, 16)
    assert restoration.metadata['family'] == 'student-t'
    assert restoration.metadata['scale']['side'] == 16
    np.testing.assert_allclose(
        restoration.x0, haar2d(restoration.data.observed)
    )


def test_invalid_side():
    for side in [8, 24, 0]:
        with pytest.raises(ValueError) as e_info:
            make_student_t_restoration(seed=1, side=side)
        assert str(e_info.value) == (
            "The argument `side` must be a power of two >= 16, got "
            "{0}.".format(side)
        )


def test_deterministic():
    problem_0 = make_student_t_restoration(seed=7, side=16)
    problem_1 = make_student_t_restoration(seed=7, side=16)
    np.testing.assert_array_equal(
        problem_0.data.observed, problem_1.data.observed
    )


def test_synthetic_image_range():
    image = synthetic_image(32)
    assert image.shape == (32, 32)
    assert np.min(image) >= 0. and np.max(image) <= 1.
    assert np.unique(image).size > 1


def test_reference_value(restoration):
    y_true = haar2d(restoration.data.true_image)
    assert restoration.metadata['psi_reference'] == pytest.approx(
        eval_objective(restoration, y_true), rel=1e-12
    )


def test_gradient_finite_difference(restoration):
    rng = np.random.default_rng(2)
    x = restoration.x0 + .1 * rng.standard_normal(restoration.dim)
    g = restoration.smooth.gradient(x)
    g_fd = np.zeros_like(x)
    for i in range(x.size):
        h = 1e-6 * (1. + abs(x[i]))
        e = np.zeros_like(x)
        e[i] = h
        g_fd[i] = (
            restoration.smooth.value(x + e) - restoration.smooth.value(x - e)
        ) / (2. * h)
    assert np.linalg.norm(g_fd - g) <= 1e-5 * np.linalg.norm(g)
