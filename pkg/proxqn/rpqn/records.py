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
"""Module for per-iteration solver records.

Classes:
    StepClass: Outcome of the ratio test.
    SolveStatus: Reason a solver run ended.
    IterationRecord: Diagnostics of one iteration.

"""

import dataclasses
import enum

import numpy as np


class StepClass(enum.Enum):
    """Outcome of the ratio test."""

    UNSUCCESSFUL = 'unsuccessful'
    SUCCESSFUL = 'successful'
    HIGHLY_SUCCESSFUL = 'highly_successful'

    @property
    def accepted(self):
        return self is not StepClass.UNSUCCESSFUL


class SolveStatus(enum.Enum):
    """Reason a solver run ended."""

    CONVERGED = 'converged'
    MAX_ITER = 'max_iter'
    MAX_TIME = 'max_time'
    STALLED = 'stalled'


@dataclasses.dataclass
class IterationRecord(object):
    """Diagnostics of iterate `x^k` and the step computed from it.

    Attributes:
        k: The iteration index.
        time_s: Seconds since the solver started, taken when `x^k`
            became the current iterate.
        psi: The objective value at `x^k`.
        res_norm: The residual norm at `x^k` (NaN if not computed).
        mu: The regularization parameter (the step parameter `L` for
            first-order solvers).
        rho: The ratio `ared / pred` (NaN when not computed).
        step_class: A `StepClass` (None for the terminal row and for
            solvers without a ratio test).
        pred: The predicted reduction.
        ared: The actual reduction.
        d_norm: The step norm.
        sub_iters: Inner iterations (Newton updates or backtracking
            trials) spent on the step.
        sub_residual: Norm of the coupled system residual at the
            returned multipliers (NaN without a subproblem solve).
        skipped_pair: Whether the curvature pair of an accepted step
            was rejected by the buffer.
        f_evals, g_evals, prox_evals, matvecs: Cumulative counters when
            `x^k` became the current iterate.

    """

    k: int
    time_s: float
    psi: float
    res_norm: float = np.nan
    mu: float = np.nan
    rho: float = np.nan
    step_class: StepClass = None
    pred: float = np.nan
    ared: float = np.nan
    d_norm: float = np.nan
    sub_iters: int = 0
    sub_residual: float = np.nan
    skipped_pair: bool = False
    f_evals: int = 0
    g_evals: int = 0
    prox_evals: int = 0
    matvecs: int = 0

    def as_row(self):
        """Return a dictionary keyed by trace column name."""
        row = dataclasses.asdict(self)
        if self.step_class is not None:
            row['step_class'] = self.step_class.value
        return row
