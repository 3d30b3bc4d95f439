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
"""Module of utility functions.

Functions:
    objective_error: Relative objective value error.

"""

import numpy as np


def objective_error(psi, psi_star):
    """Return the objective value error.

    The error is `(psi - psi_star) / max(1, |psi_star|)`.

    Arguments:
        psi: The current objective value.
        psi_star: The reference (optimal) objective value. If None,
            NaN is returned.

    Returns:
        The relative objective value error as a float.

    """
    if psi_star is None:
        return np.nan
    return (psi - psi_star) / max(1., abs(psi_star))
