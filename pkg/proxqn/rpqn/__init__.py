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
"""Regularized proximal quasi-Newton initialization file."""

from proxqn.rpqn.config import RpqnConfig
from proxqn.rpqn.records import IterationRecord
from proxqn.rpqn.records import SolveStatus
from proxqn.rpqn.records import StepClass
from proxqn.rpqn.stationarity import residual
from proxqn.rpqn.driver import solve
from proxqn.rpqn.driver import termination_status
from proxqn.rpqn.state import RpqnState
from proxqn.rpqn.step import classify_step
from proxqn.rpqn.step import predicted_reduction
from proxqn.rpqn.step import rpqn_step
from proxqn.rpqn.stopping import ObjectiveErrorStop
from proxqn.rpqn.stopping import ResidualStop
from proxqn.rpqn.stopping import TargetValueStop
from proxqn.rpqn.stopping import reference_value
from proxqn.rpqn.stopping import stop_from_dict
from proxqn.rpqn.stopping import stop_to_dict
