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
"""Module for seeded random number generation.

Functions:
    make_rng: Create a counter-based random number generator.

"""

import numpy as np


def make_rng(seed):
    """Create a counter-based random number generator.

    All problem generators draw their randomness from this function so
    that repeated calls with the same seed are bit-identical.

    Arguments:
        seed: A non-negative integer.

    Returns:
        rng: A `numpy.random.Generator` backed by a Philox bit
            generator.

    Raises:
        ValueError

    """
    if int(seed) != seed or seed < 0:
        raise ValueError(
            "The argument `seed` must be a non-negative integer."
        )
    return np.random.Generator(np.random.Philox(int(seed)))
