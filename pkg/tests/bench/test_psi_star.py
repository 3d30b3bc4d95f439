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
"""Module for testing psi_star.py."""

import json
import logging
import os

import pytest

from proxqn.bench import build_instance
from proxqn.bench import compute_psi_star
from proxqn.bench import psi_star_path

pytestmark = pytest.mark.filterwarnings("ignore:The reference run")


def test_path():
    filepath = psi_star_path('cache', 'group-lasso', {'k': 2}, 7)
    assert filepath == os.path.join(
        'cache', 'group-lasso', 'k2', '7', 'psistar.json'
    )


def test_scalar_problem(scalar_l1_problem):
    psi_star = compute_psi_star(scalar_l1_problem.with_x0([3.]))
    assert psi_star == pytest.approx(.5, abs=1e-10)


def test_counter_untouched():
    problem = build_instance('group-lasso', {'k': 1}, 2)
    compute_psi_star(problem, max_iter=50)
    assert problem.counter.f_evals == 0
    assert problem.counter.g_evals == 0


def test_cache(tmpdir, caplog):
    cache_dir = tmpdir.strpath
    problem = build_instance('group-lasso', {'k': 1}, 3)
    with caplog.at_level(logging.INFO, logger='proxqn.bench.psi_star'):
        psi_star = compute_psi_star(problem, cache_dir=cache_dir)
    assert 'cache miss' in caplog.text

    filepath = psi_star_path(cache_dir, 'group-lasso', {'k': 1}, 3)
    with open(filepath) as f:
        record = json.load(f)
    assert record['psi_star'] == psi_star
    assert record['iterations'] > 0

    caplog.clear()
    with caplog.at_level(logging.INFO, logger='proxqn.bench.psi_star'):
        assert compute_psi_star(problem, cache_dir=cache_dir) == psi_star
    assert 'cache hit' in caplog.text

    # A cached value is returned as stored.
    record['psi_star'] = 123.
    with open(filepath, 'w') as f:
        json.dump(record, f)
    assert compute_psi_star(problem, cache_dir=cache_dir) == 123.


def test_corrupt_cache(tmpdir):
    problem = build_instance('group-lasso', {'k': 1}, 4)
    filepath = psi_star_path(tmpdir.strpath, 'group-lasso', {'k': 1}, 4)
    os.makedirs(os.path.dirname(filepath))
    with open(filepath, 'w') as f:
        f.write('{not json')
    with pytest.raises(OSError):
        compute_psi_star(problem, cache_dir=tmpdir.strpath)
