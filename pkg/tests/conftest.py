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
"""Root pytest setup."""

import numpy as np
import pytest

from proxqn.problems import CompositeProblem
from proxqn.problems import FunctionSmooth
from proxqn.problems import RegularizerSpec
from proxqn.problems import make_group_lasso
from proxqn.problems import make_lasso


@pytest.fixture
def scalar_l1_problem():
    """Return the problem `min 1/2 (x - 1)^2 + |x|`.

    The minimizer is `x = 0` with optimal value 0.5.

    """
    smooth = FunctionSmooth(
        lambda x: .5 * float((x[0] - 1.)**2), lambda x: x - 1., dim=1
    )
    return CompositeProblem(
        smooth=smooth, nonsmooth=RegularizerSpec.l1(1.), dim=1
    )


@pytest.fixture
def quadratic_problem():
    """Return `min 1/2 x^T H x - c^T x` with a fixed SPD `H`."""
    rng = np.random.default_rng(7)
    Q, _ = np.linalg.qr(rng.standard_normal((6, 6)))
    H = Q @ np.diag([1., 2., 3., 4., 6., 8.]) @ Q.T
    c = rng.standard_normal(6)
    smooth = FunctionSmooth(
        lambda x: .5 * float(x @ H @ x) - float(c @ x),
        lambda x: H @ x - c, dim=6
    )
    problem = CompositeProblem(
        smooth=smooth, nonsmooth=RegularizerSpec.zero(), dim=6,
        metadata={'H': H, 'c': c}
    )
    return problem


@pytest.fixture
def small_group_lasso():
    """Return a group lasso instance with n=25, m=16."""
    problem, _, _ = make_group_lasso(seed=3, k=1)
    return problem


@pytest.fixture
def small_lasso():
    """Return a lasso instance with n=40, m=20."""
    problem, _, _ = make_lasso(seed=2, n=40, m=20, lam=.1)
    return problem
