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
"""Limited-memory quasi-Newton initialization file."""

from proxqn.lmqn.compact_rep import CompactRep
from proxqn.lmqn.compact_rep import SingularMiddleMatrixError
from proxqn.lmqn.compact_rep import apply_B
from proxqn.lmqn.compact_rep import build_compact
from proxqn.lmqn.pair_buffer import PairBuffer
from proxqn.lmqn.pair_buffer import PushResult
from proxqn.lmqn.pair_buffer import QuasiNewtonKind
from proxqn.lmqn.pair_buffer import gamma_init
from proxqn.lmqn.pair_buffer import push_pair
from proxqn.lmqn.spectral_split import SpectralSplit
from proxqn.lmqn.spectral_split import SpectralSplitError
from proxqn.lmqn.spectral_split import eigensplit
