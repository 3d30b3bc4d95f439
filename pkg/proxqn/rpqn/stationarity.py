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
"""Module for the stationarity residual.

Functions:
    residual: Return `r(x) = prox_phi(x - grad f(x)) - x`.

"""

import numpy as np

from proxqn.prox.scaled_prox import ScaledProxContext
from proxqn.prox.scaled_prox import prox_scaled


def residual(problem, x, g=None):
    """Return the residual `prox_phi(x - grad f(x)) - x`.

    The prox uses the identity metric. `r(x) = 0` holds exactly at
    stationary points.

    Arguments:
        problem: A `CompositeProblem`.
        x: A point.
        g (optional): The gradient at `x`, if already available.

    Returns:
        A 1D array.

    """
    x = np.asarray(x, dtype=float)
    if g is None:
        g = problem.grad(x)
    ctx = ScaledProxContext(
        spec=problem.nonsmooth, gamma_hat=1., counter=problem.counter
    )
    return prox_scaled(ctx, x - g) - x
