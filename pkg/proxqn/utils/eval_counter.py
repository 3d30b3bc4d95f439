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
"""Module for counting oracle evaluations.

Classes:
    EvalCounter: A tally of smooth-part, proximity operator and linear
        operator calls.

"""

import dataclasses


@dataclasses.dataclass
class EvalCounter(object):
    """Tally of oracle calls made while solving a problem.

    Attributes:
        f_evals: Number of smooth-part value evaluations.
        g_evals: Number of smooth-part gradient evaluations.
        prox_evals: Number of scaled proximity operator evaluations.
        matvecs: Number of applications of the forward operator `A`
            plus applications of its adjoint `A^T`. Each application
            counts once.

    """

    f_evals: int = 0
    g_evals: int = 0
    prox_evals: int = 0
    matvecs: int = 0

    def snapshot(self):
        """Return the current counts as a dictionary."""
        return dataclasses.asdict(self)

    def since(self, snapshot):
        """Return the counts accumulated since `snapshot` was taken.

        Arguments:
            snapshot: A dictionary returned by `snapshot`. If None, the
                absolute counts are returned.

        """
        current = self.snapshot()
        if snapshot is None:
            return current
        return {key: value - snapshot[key] for key, value in current.items()}

    def reset(self):
        """Zero all counts."""
        self.f_evals = 0
        self.g_evals = 0
        self.prox_evals = 0
        self.matvecs = 0
