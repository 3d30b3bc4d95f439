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
"""Module for testing trace_table.py."""

import numpy as np
import pandas as pd
import pytest

from proxqn.rpqn import IterationRecord
from proxqn.rpqn import StepClass
from proxqn.utils import TRACE_COLUMNS
from proxqn.utils import TraceTable


@pytest.fixture
def trace():
    """Return a three-row trace."""
    table = TraceTable(psi_star=2.)
    table.append(IterationRecord(
        k=0, time_s=0., psi=5., res_norm=1., mu=1., rho=.95,
        step_class=StepClass.HIGHLY_SUCCESSFUL, pred=3., ared=2.85,
        d_norm=.5, sub_iters=2, f_evals=1, g_evals=1, prox_evals=2,
        matvecs=3
    ))
    table.append(IterationRecord(
        k=1, time_s=.1, psi=2.15, res_norm=.1, mu=.5,
        step_class=StepClass.UNSUCCESSFUL, pred=1e-9, d_norm=.1,
        sub_iters=1, f_evals=2, g_evals=2, prox_evals=4, matvecs=6
    ))
    table.append(IterationRecord(
        k=2, time_s=.2, psi=2.15, res_norm=.1, mu=2., f_evals=2,
        g_evals=2, prox_evals=5, matvecs=6
    ))
    return table


def test_header_is_exact(trace, tmpdir):
    """Test that the CSV header matches the fixed schema."""
    filepath = tmpdir.join('trace.csv')
    trace.save(str(filepath))
    with open(str(filepath)) as f:
        header = f.readline().strip()
    assert header == (
        'k,time_s,psi,obj_err,res_norm,mu,rho,step_class,pred,ared,'
        'd_norm,sub_iters,f_evals,g_evals,prox_evals,matvecs'
    )
    assert tuple(header.split(',')) == TRACE_COLUMNS


def test_row_count(trace, tmpdir):
    """Test that the file has one line per row plus the header."""
    filepath = tmpdir.join('trace.csv')
    trace.save(str(filepath))
    with open(str(filepath)) as f:
        lines = f.read().strip().split('\n')
    assert len(lines) == len(trace) + 1


def test_missing_rho_is_empty(trace, tmpdir):
    """Test that a missing ratio is written as an empty field."""
    filepath = tmpdir.join('trace.csv')
    trace.save(str(filepath))
    with open(str(filepath)) as f:
        lines = f.read().strip().split('\n')
    fields = lines[2].split(',')
    assert fields[TRACE_COLUMNS.index('rho')] == ''
    assert fields[TRACE_COLUMNS.index('step_class')] == 'unsuccessful'
    fields = lines[3].split(',')
    assert fields[TRACE_COLUMNS.index('step_class')] == ''


def test_objective_error_column(trace):
    """Test the objective value error relative to the reference."""
    np.testing.assert_allclose(
        trace.column('obj_err'), [1.5, .075, .075]
    )
    trace.set_reference(None)
    assert np.all(np.isnan(trace.column('obj_err')))


def test_save_load(trace, tmpdir):
    """Test that loading reproduces the numeric columns."""
    filepath = str(tmpdir.join('trace.csv'))
    trace.save(filepath)
    loaded = TraceTable.load(filepath, psi_star=2.)
    assert len(loaded) == 3
    frame = loaded.to_frame()
    pd.testing.assert_series_equal(
        frame['psi'], trace.to_frame()['psi'], check_names=True
    )
    assert loaded.rows[0]['step_class'] == 'highly_successful'
    assert loaded.rows[2]['step_class'] is None


def test_k_strictly_increasing(trace):
    """Test that rows with a repeated `k` are rejected."""
    with pytest.raises(ValueError) as e_info:
        trace.append(IterationRecord(k=2, time_s=.3, psi=1.))
    assert str(e_info.value) == "The column `k` must be strictly increasing."


def test_time_nondecreasing(trace):
    """Test that rows going back in time are rejected."""
    with pytest.raises(ValueError) as e_info:
        trace.append(IterationRecord(k=3, time_s=.1, psi=1.))
    assert str(e_info.value) == "The column `time_s` must be nondecreasing."


def test_summary(trace):
    """Test the iteration and evaluation totals."""
    summary = trace.summary()
    assert summary['iter'] == 2
    assert summary['highly_succ_iter'] == 1
    assert summary['succ_iter'] == 0
    assert summary['unsucc_iter'] == 1
    assert summary['sub_iter'] == 3
    assert summary['function_eval'] == 2
    assert summary['prox_eval'] == 5
    assert summary['matvec'] == 6
    assert summary['skipped_updates'] == 0
