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
"""Module for testing config.py."""

import json

import pytest

from proxqn.lmqn import QuasiNewtonKind
from proxqn.rpqn import ObjectiveErrorStop
from proxqn.rpqn import ResidualStop
from proxqn.rpqn import RpqnConfig


def test_defaults():
    config = RpqnConfig()
    assert config.mu0 == 1.
    assert config.p_min == 1e-4
    assert config.c1 == 1e-4
    assert config.c2 == .9
    assert config.sigma1 == .5
    assert config.sigma2 == 4.
    assert config.memory == 5
    assert config.kind is QuasiNewtonKind.BFGS
    assert config.newton_tol == 1e-10
    assert config.newton_maxit == 10
    assert config.mu_min == 1e-12
    assert config.stop_rule == ResidualStop(1e-6)


def test_kind_from_string():
    assert RpqnConfig(kind='sr1').kind is QuasiNewtonKind.SR1


@pytest.mark.parametrize(
    "kwargs,message", [
        ({'mu0': 0.}, "The argument `mu0` must be positive."),
        ({'c1': .5}, "The argument `c1` must lie in (0, 1/2)."),
        ({'c2': 1e-5}, "The argument `c2` must lie in (c1, 1)."),
        ({'sigma1': 1.}, "The argument `sigma1` must lie in (0, 1)."),
        ({'sigma2': 1.}, "The argument `sigma2` must be greater than 1."),
        (
            {'memory': -1},
            "The argument `memory` must be a non-negative integer."
        ),
        ({'mu_min': 0.}, "The argument `mu_min` must lie in (0, mu0]."),
        ({'mu_min': 2.}, "The argument `mu_min` must lie in (0, mu0]."),
        ({'mu_max': .5}, "The argument `mu_max` must exceed `mu0`."),
    ]
)
def test_invalid(kwargs, message):
    with pytest.raises(ValueError) as e_info:
        RpqnConfig(**kwargs)
    assert str(e_info.value) == message


def test_invalid_kind():
    with pytest.raises(ValueError):
        RpqnConfig(kind='dfp')


def test_dict_round_trip():
    config = RpqnConfig(
        memory=3, kind='sr1', stop=ObjectiveErrorStop(psi_star=2., tol=1e-5)
    )
    d = json.loads(json.dumps(config.to_dict()))
    assert d['kind'] == 'sr1'
    assert d['stop'] == {
        'psi_star': 2., 'tol': 1e-5, 'name': 'objective-error'
    }
    assert RpqnConfig.from_dict(d) == config
