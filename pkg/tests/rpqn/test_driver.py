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
"""Module for testing driver.py."""

import numpy as np
import pytest

from proxqn.baselines import SparsaConfig
from proxqn.baselines import sparsa_solve
from proxqn.bench import compute_psi_star
from proxqn.problems import lipschitz_constant
from proxqn.problems import make_group_lasso
from proxqn.problems import make_lasso
from proxqn.problems import make_student_t_restoration
from proxqn.rpqn import ObjectiveErrorStop
from proxqn.rpqn import ResidualStop
from proxqn.rpqn import RpqnConfig
from proxqn.rpqn import SolveStatus
from proxqn.rpqn import TargetValueStop
from proxqn.rpqn import residual
from proxqn.rpqn import solve
from proxqn.rpqn import termination_status
from proxqn.utils import TRACE_COLUMNS

pytestmark = pytest.mark.filterwarnings("ignore:The reference run")


def test_scalar_problem(scalar_l1_problem):
    x, trace, status = solve(scalar_l1_problem, x0=np.array([3.]))
    assert status is SolveStatus.CONVERGED
    np.testing.assert_allclose(x, [0.], atol=1e-6)
    assert trace.final['psi'] == pytest.approx(.5, abs=1e-8)
    assert trace.final['res_norm'] <= 1e-6


def test_start_at_solution(scalar_l1_problem):
    x, trace, status = solve(scalar_l1_problem)
    assert status is SolveStatus.CONVERGED
    assert len(trace) == 1
    assert trace.final['k'] == 0


@pytest.mark.parametrize("kind", ['bfgs', 'sr1'])
def test_quadratic(quadratic_problem, kind):
    H = quadratic_problem.metadata['H']
    c = quadratic_problem.metadata['c']
    config = RpqnConfig(kind=kind, memory=5, tol_r=1e-7)
    x, _, status = solve(quadratic_problem, config=config)
    assert status is SolveStatus.CONVERGED
    np.testing.assert_allclose(x, np.linalg.solve(H, c), atol=1e-6)


@pytest.mark.parametrize("kind", ['bfgs', 'sr1'])
def test_group_lasso(small_group_lasso, kind):
    config = RpqnConfig(kind=kind, memory=5, max_iter=1000)
    x, trace, status = solve(small_group_lasso, config=config)
    assert status is SolveStatus.CONVERGED
    g = small_group_lasso.grad(x)
    assert np.linalg.norm(residual(small_group_lasso, x, g)) <= 1e-6

    frame = trace.to_frame()
    assert list(frame.columns[:len(TRACE_COLUMNS)]) == list(TRACE_COLUMNS)
    # The objective never increases and the iteration index is dense.
    assert np.all(np.diff(frame['psi'].to_numpy()) <= 0.)
    np.testing.assert_array_equal(frame['k'], np.arange(len(frame)))
    assert np.all(np.diff(frame['f_evals'].to_numpy()) >= 0)
    assert np.all(np.isfinite(frame['mu']))


def test_lasso_with_objective_error(small_lasso):
    _, reference, status = solve(
        small_lasso, config=RpqnConfig(tol_r=1e-7, max_iter=5000)
    )
    assert status is SolveStatus.CONVERGED
    psi_star = reference.final['psi']

    stop = ObjectiveErrorStop(psi_star=psi_star, tol=1e-6)
    _, trace, status = solve(small_lasso, config=RpqnConfig(stop=stop))
    assert status is SolveStatus.CONVERGED
    assert trace.final['obj_err'] <= 1e-6
    assert np.all(np.isfinite(trace.column('obj_err')))


def test_target_value(scalar_l1_problem):
    stop = TargetValueStop(psi_target=1.)
    _, trace, status = solve(
        scalar_l1_problem, x0=np.array([3.]), config=RpqnConfig(stop=stop)
    )
    assert status is SolveStatus.CONVERGED
    assert trace.final['psi'] <= 1.
    assert trace.column('psi')[-2] > 1.


def test_max_iter(small_group_lasso):
    config = RpqnConfig(max_iter=2, tol_r=1e-14)
    _, trace, status = solve(small_group_lasso, config=config)
    assert status is SolveStatus.MAX_ITER
    assert len(trace) == 3
    assert trace.final['k'] == 2


def test_stalled(quadratic_problem):
    """Test that a blown-up regularization parameter ends the run."""
    H = quadratic_problem.metadata['H']
    c = quadratic_problem.metadata['c']
    _, eigvec = np.linalg.eigh(H)
    x0 = np.linalg.solve(H, c + eigvec[:, -1])
    config = RpqnConfig(mu0=1e-6, mu_max=2e-6)
    x, trace, status = solve(quadratic_problem, x0=x0, config=config)
    assert status is SolveStatus.STALLED
    np.testing.assert_array_equal(x, x0)
    assert trace.rows[0]['step_class'] == 'unsuccessful'


def test_termination_status():
    stop = ResidualStop(1e-6)
    assert termination_status(stop, 0., 1e-7, 5, 10, 0.) is (
        SolveStatus.CONVERGED
    )
    assert termination_status(stop, 0., 1e-3, 10, 10, 0.) is (
        SolveStatus.MAX_ITER
    )
    assert termination_status(stop, 0., 1e-3, 5, 10, 2., 1.) is (
        SolveStatus.MAX_TIME
    )
    assert termination_status(stop, 0., 1e-3, 5, 10, 0.) is None


def test_verbose(scalar_l1_problem, capsys):
    solve(
        scalar_l1_problem, x0=np.array([3.]), config=RpqnConfig(verbose=1)
    )
    captured = capsys.readouterr()
    assert 'RPQN (bfgs, memory 5)' in captured.out
    assert 'Status: converged' in captured.out


def check_step_invariants(trace, config):
    """Check the step contract on every pair of consecutive rows."""
    rows = trace.rows
    for row, nxt in zip(rows[:-1], rows[1:]):
        assert nxt['k'] == row['k'] + 1
        if row['step_class'] == 'unsuccessful':
            assert nxt['psi'] == row['psi']
            assert nxt['res_norm'] == row['res_norm']
            assert nxt['mu'] == config.sigma2 * row['mu']
            continue
        assert nxt['psi'] < row['psi']
        assert row['rho'] > config.c1
        assert row['pred'] > (
            config.p_min * row['d_norm'] * row['res_norm']
        )
        if row['step_class'] == 'highly_successful':
            assert nxt['mu'] == max(config.sigma1 * row['mu'], config.mu_min)
        else:
            assert nxt['mu'] == row['mu']


def accepted_step_norms(trace):
    return np.array([
        row['d_norm'] for row in trace.rows[:-1]
        if row['step_class'] != 'unsuccessful'
    ])


def convex_instance(family, seed):
    if family == 'group-lasso':
        return make_group_lasso(seed=seed, k=4)
    return make_lasso(seed=seed, n=300, m=150, lam=.1)


@pytest.mark.slow
@pytest.mark.parametrize("kind,memory", [('bfgs', 3), ('sr1', 5)])
def test_inner_iterations_group_lasso(kind, memory):
    """Test that most subproblems take one or two Newton updates."""
    problem, _, _ = make_group_lasso(seed=1, k=4)
    config = RpqnConfig(kind=kind, memory=memory, tol_r=1e-8)
    _, trace, status = solve(problem, config=config)
    assert status is SolveStatus.CONVERGED
    rows = trace.rows[:-1]
    sub_iters = np.array([row['sub_iters'] for row in rows])
    assert np.median(sub_iters) <= 2
    assert np.max(sub_iters) <= 10
    sub_residual = np.array([row['sub_residual'] for row in rows])
    solved = np.isfinite(sub_residual)
    assert np.sum(solved) >= .9 * len(rows)
    assert np.all(sub_residual[solved] < 1e-10)


@pytest.mark.slow
@pytest.mark.parametrize("family", ['group-lasso', 'lasso'])
@pytest.mark.parametrize("seed", list(range(1, 11)))
def test_convex_objective_error(family, seed):
    """Test convergence, the step contract and the bound on `mu`."""
    problem, data, _ = convex_instance(family, seed)
    psi_star = compute_psi_star(problem)
    stop = ObjectiveErrorStop(psi_star=psi_star, tol=1e-6)
    mu_bound_base = max(1., lipschitz_constant(data))
    for kind, memory in [('bfgs', 3), ('sr1', 5)]:
        config = RpqnConfig(
            kind=kind, memory=memory, stop=stop, max_iter=5000
        )
        _, trace, status = solve(problem, config=config)
        assert status is SolveStatus.CONVERGED
        assert trace.final['obj_err'] <= 1e-6
        check_step_invariants(trace, config)
        mu = trace.column('mu').astype(float)
        assert np.max(mu) <= config.sigma2 * mu_bound_base


@pytest.mark.slow
@pytest.mark.parametrize("family", ['group-lasso', 'lasso'])
def test_step_norms_summable(family):
    """Test that the tail of the accepted step norms is negligible."""
    problem, _, _ = convex_instance(family, 1)
    config = RpqnConfig(memory=3, tol_r=1e-9, max_iter=5000)
    _, trace, status = solve(problem, config=config)
    assert status is SolveStatus.CONVERGED
    norms = accepted_step_norms(trace)
    tail = norms[len(norms) - len(norms) // 4:]
    assert np.sum(tail) < .05 * np.sum(norms)


@pytest.mark.slow
def test_nonconvex_restoration():
    problem = make_student_t_restoration(seed=1, side=32, lam=1e-4)
    psi_start = float(problem.f(problem.x0) + problem.phi(problem.x0))
    psi_ref = compute_psi_star(problem, tol_r=1e-8, max_iter=5000)

    config = RpqnConfig(kind='sr1', memory=2, max_iter=2000)
    _, trace, _ = solve(problem, config=config)
    check_step_invariants(trace, config)
    psi = trace.column('psi').astype(float)
    assert np.all(np.diff(psi) <= 0.)
    assert psi_start - psi[-1] >= .5 * (psi_start - psi_ref)
    assert np.max(trace.column('mu').astype(float)) <= 1e6

    _, sparsa_trace, status = sparsa_solve(
        problem, config=SparsaConfig(max_iter=500)
    )
    assert status in (SolveStatus.CONVERGED, SolveStatus.MAX_ITER)
    assert sparsa_trace.final['psi'] < psi_start
