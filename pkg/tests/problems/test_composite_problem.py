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
"""Module for testing composite_problem.py."""

import numpy as np
import pytest

from proxqn.problems import CompositeProblem
from proxqn.problems import FunctionSmooth
from proxqn.problems import RegularizerSpec
from proxqn.problems import eval_objective


def test_zero_case():
    """Test `f(x) = 1/2 ||x||^2`, no regularizer, at the origin."""
    smooth = FunctionSmooth(lambda x: .5 * float(x @ x), lambda x: x, dim=3)
    problem = CompositeProblem(
        smooth=smooth, nonsmooth=RegularizerSpec.zero(), dim=3
    )
    assert eval_objective(problem, np.zeros(3)) == 0.


def test_scalar_l1(scalar_l1_problem):
    assert eval_objective(scalar_l1_problem, np.zeros(1)) == .5
    assert eval_objective(scalar_l1_problem, np.array([2.])) == 2.5


def test_default_start_point(scalar_l1_problem):
    np.testing.assert_array_equal(scalar_l1_problem.x0, np.zeros(1))


def test_dimension_mismatch(scalar_l1_problem):
    with pytest.raises(ValueError) as e_info:
        eval_objective(scalar_l1_problem, np.zeros(2))
    assert str(e_info.value) == "Expected a point of shape (1,), got (2,)."


def test_group_dimension_mismatch():
    smooth = FunctionSmooth(lambda x: 0., lambda x: 0. * x, dim=4)
    with pytest.raises(ValueError):
        CompositeProblem(
            smooth=smooth,
            nonsmooth=RegularizerSpec.group_l21(1., [[0, 1], [2]], 3), dim=4
        )


def test_counters(small_lasso):
    """Test that every oracle call is tallied."""
    x = np.ones(small_lasso.dim)
    small_lasso.psi(x)
    small_lasso.grad(x)
    small_lasso.grad(x)
    counter = small_lasso.counter
    assert counter.f_evals == 1
    assert counter.g_evals == 2
    assert counter.matvecs == 5
    assert counter.prox_evals == 0


def test_with_x0_has_fresh_counter(small_lasso):
    small_lasso.f(small_lasso.x0)
    other = small_lasso.with_x0(np.ones(small_lasso.dim))
    assert other.counter.f_evals == 0
    assert small_lasso.counter.f_evals == 1
    np.testing.assert_array_equal(other.x0, np.ones(small_lasso.dim))
