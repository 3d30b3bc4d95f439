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
"""Benchmark harness initialization file."""

from proxqn.bench.comparison import compare
from proxqn.bench.comparison import load_run
from proxqn.bench.comparison import summarize_run
from proxqn.bench.comparison import sweep
from proxqn.bench.comparison import time_to_tolerance
from proxqn.bench.instances import build_instance
from proxqn.bench.psi_star import compute_psi_star
from proxqn.bench.psi_star import psi_star_path
from proxqn.bench.run_spec import RunSpec
from proxqn.bench.run_spec import default_scale
from proxqn.bench.run_spec import parse_scale
from proxqn.bench.run_spec import scale_dimension
from proxqn.bench.run_spec import scale_tag
from proxqn.bench.runner import RepetitionResult
from proxqn.bench.runner import RunResult
from proxqn.bench.runner import aggregate_traces
from proxqn.bench.runner import run
