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
"""Top-level package initialization file.

Modules:
    baselines
    bench
    lmqn
    problems
    prox
    rpqn
    subsolver
    utils
"""

import proxqn.baselines
import proxqn.bench
import proxqn.lmqn
import proxqn.problems
import proxqn.prox
import proxqn.rpqn
import proxqn.subsolver
import proxqn.utils

__version__ = '0.1.0'
