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
"""Module for building benchmark instances.

Functions:
    build_instance: Create the problem of a family at a given scale.

"""

from proxqn.problems.least_squares import make_group_lasso
from proxqn.problems.least_squares import make_lasso
from proxqn.problems.restoration import make_student_t_restoration


def build_instance(family, scale, seed):
    """Create a seeded benchmark problem.

    Arguments:
        family: 'group-lasso', 'lasso' or 'student-t'.
        scale: A dictionary of scale parameters (see `parse_scale`).
        seed: A non-negative integer.

    Returns:
        problem: A `CompositeProblem` with `metadata['family']`,
            `metadata['seed']` and `metadata['scale']` set.

    Raises:
        ValueError: If the family is unknown.

    """
    if family == 'group-lasso':
        problem, _, _ = make_group_lasso(seed, scale['k'])
        return problem
    if family == 'lasso':
        problem, _, _ = make_lasso(
            seed, scale['n'], scale['m'], scale['lambda']
        )
        return problem
    if family == 'student-t':
        return make_student_t_restoration(
            seed, side=scale['side'], lam=scale['lambda'],
            noise_scale=scale['noise_scale']
        )
    raise ValueError("Unknown family '{0}'.".format(family))
