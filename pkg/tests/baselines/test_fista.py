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
"""Module for testing fista.py."""

import dataclasses

import numpy as np
import pytest

from proxqn.baselines import FistaConfig
from proxqn.baselines import fista_solve
from proxqn.problems import RegularizerSpec
from proxqn.rpqn import ObjectiveErrorStop
from proxqn.rpqn import RpqnConfig
from proxqn.rpqn import SolveStatus
from proxqn.rpqn import solve


@pytest.fixture
def quadratic_l1(quadratic_problem):
    return dataclasses.replace(
        quadratic_problem, nonsmooth=RegularizerSpec.l1(.5)
    )


def test_scalar_problem(scalar_l1_problem):
    x, trace, status = fista_solve(scalar_l1_problem, x0=np.array([3.]))
    assert status is SolveStatus.CONVERGED
    np.testing.assert_allclose(x, [0.], atol=1e-5)
    assert trace.final['psi'] == pytest.approx(.5, abs=1e-6)


def test_agrees_with_rpqn(quadratic_l1):
    x_fista, _, status = fista_solve(
        quadratic_l1, config=FistaConfig(tol_r=1e-7)
    )
    assert status is SolveStatus.CONVERGED
    x_rpqn, _, status = solve(quadratic_l1, config=RpqnConfig(tol_r=1e-7))
    assert status is SolveStatus.CONVERGED
    np.testing.assert_allclose(x_fista, x_rpqn, atol=1e-5)


def test_step_parameter_nondecreasing(small_group_lasso):
    _, trace, _ = fista_solve(
        small_group_lasso, config=FistaConfig(max_iter=200)
    )
    L = trace.column('mu')
    assert np.all(np.diff(L) >= 0.)
    assert L[0] >= 1.


def test_objective_error(small_group_lasso):
    _, reference, _ = solve(small_group_lasso)
    stop = ObjectiveErrorStop(psi_star=reference.final['psi'], tol=1e-3)
    _, trace, status = fista_solve(
        small_group_lasso, config=FistaConfig(stop=stop)
    )
    assert status is SolveStatus.CONVERGED
    assert trace.final['obj_err'] <= 1e-3
    # The residual is not computed under an objective-error rule.
    assert np.all(np.isnan(trace.column('res_norm').astype(float)))


def test_max_iter(small_group_lasso):
    _, trace, status = fista_solve(
        small_group_lasso, config=FistaConfig(max_iter=5, tol_r=1e-14)
    )
    assert status is SolveStatus.MAX_ITER
    assert len(trace) == 6


def test_invalid_config():
    with pytest.raises(ValueError) as e_info:
        FistaConfig(eta=1.)
    assert str(e_info.value) == "The argument `eta` must be greater than 1."
    with pytest.raises(ValueError):
        FistaConfig(L0=0.)
