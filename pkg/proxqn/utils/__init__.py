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
"""Utilities initialization file."""

from proxqn.utils.eval_counter import EvalCounter
from proxqn.utils.metrics import objective_error
from proxqn.utils.pgm import write_pgm
from proxqn.utils.trace_table import TRACE_COLUMNS
from proxqn.utils.trace_table import TraceTable
