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
"""Subproblem solver initialization file."""

from proxqn.subsolver.metric_factors import MetricFactors
from proxqn.subsolver.metric_factors import NotPositiveDefinite
from proxqn.subsolver.metric_factors import apply_B1_inv
from proxqn.subsolver.metric_factors import apply_B_inv
from proxqn.subsolver.metric_factors import factor_metric
from proxqn.subsolver.newton import AlphaPair
from proxqn.subsolver.newton import NoConvergence
from proxqn.subsolver.newton import eval_G
from proxqn.subsolver.newton import eval_L
from proxqn.subsolver.newton import multipliers_at
from proxqn.subsolver.newton import semismooth_newton
from proxqn.subsolver.newton import shifted_point
from proxqn.subsolver.oracle import oracle_prox_dense
from proxqn.subsolver.metric_prox import prox_metric
from proxqn.subsolver.metric_prox import solve_subproblem
