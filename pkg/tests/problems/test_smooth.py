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
"""Module for testing smooth.py."""

import numpy as np
import pytest

from proxqn.problems import DenseLeastSquaresData
from proxqn.problems import FunctionSmooth
from proxqn.problems import LeastSquaresSmooth


def test_least_squares_value_gradient():
    A = np.array([[1., 2.], [3., 4.], [0., 1.]])
    b = np.array([1., 0., 2.])
    smooth = LeastSquaresSmooth(DenseLeastSquaresData(A=A, b=b))
    x = np.array([.5, -1.])
    r = A @ x - b
    assert smooth.dim == 2
    assert smooth.value(x) == pytest.approx(.5 * r @ r)
    np.testing.assert_allclose(smooth.gradient(x), A.T @ r)
    assert smooth.matvecs_per_value == 1
    assert smooth.matvecs_per_gradient == 2


def test_function_smooth():
    smooth = FunctionSmooth(
        lambda x: float(x @ x), lambda x: 2. * x, dim=3
    )
    x = np.array([1., 2., 3.])
    assert smooth.value(x) == 14.
    np.testing.assert_array_equal(smooth.gradient(x), 2. * x)


def test_invalid_data():
    with pytest.raises(ValueError) as e_info:
        DenseLeastSquaresData(A=np.ones([3, 2]), b=np.ones([2]))
    assert str(e_info.value) == "The argument `b` must have shape (3,)."
    with pytest.raises(ValueError):
        DenseLeastSquaresData(A=np.ones([3]), b=np.ones([3]))
    with pytest.raises(ValueError):
        FunctionSmooth(lambda x: 0., lambda x: x, dim=0)
