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
"""Module for dense least squares problem families.

Classes:
    DenseLeastSquaresData: The data `A`, `b` of `Ax ~ b`.

Functions:
    random_group_partition: Partition indices into random groups.
    make_group_lasso: Seeded group lasso instance.
    make_lasso: Seeded lasso instance.
    lipschitz_constant: Largest eigenvalue of `A^T A`.

"""

import dataclasses

import numpy as np

from proxqn.problems.composite_problem import CompositeProblem
from proxqn.problems.random_state import make_rng
from proxqn.problems.regularizer import RegularizerSpec
from proxqn.problems.smooth import LeastSquaresSmooth

GROUP_SIZE_MIN = 4
GROUP_SIZE_MAX = 12


@dataclasses.dataclass(frozen=True, eq=False)
class DenseLeastSquaresData(object):
    """Dense data of a least squares loss.

    Attributes:
        A: An (m, n) array.
        b: An (m,) array.

    """

    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.A, dtype=float)
        b = np.asarray(self.b, dtype=float)
        if A.ndim != 2:
            raise ValueError("The argument `A` must be a 2D array.")
        if b.shape != (A.shape[0],):
            raise ValueError(
                "The argument `b` must have shape ({0},).".format(A.shape[0])
            )
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
            raise ValueError("The arguments `A` and `b` must be finite.")
        object.__setattr__(self, 'A', A)
        object.__setattr__(self, 'b', b)

    @property
    def m(self):
        """Return the number of observations."""
        return self.A.shape[0]

    @property
    def n(self):
        """Return the number of variables."""
        return self.A.shape[1]


def random_group_partition(
        rng, n, min_size=GROUP_SIZE_MIN, max_size=GROUP_SIZE_MAX):
    """Partition `range(n)` into randomly chosen groups.

    Group sizes are drawn uniformly from `[min_size, max_size]` while
    walking a random permutation of the indices. If fewer than
    `min_size` indices would remain, they are merged into the group
    just drawn.

    Arguments:
        rng: A `numpy.random.Generator`.
        n: The number of indices.
        min_size (optional): Smallest group size.
        max_size (optional): Largest drawn group size.

    Returns:
        groups: A list of sorted index arrays.

    """
    perm = rng.permutation(n)
    groups = []
    start = 0
    while start < n:
        size = int(rng.integers(min_size, max_size + 1))
        stop = min(start + size, n)
        if n - stop < min_size:
            stop = n
        groups.append(np.sort(perm[start:stop]))
        start = stop
    return groups


def _least_squares_problem(data, nonsmooth, metadata):
    return CompositeProblem(
        smooth=LeastSquaresSmooth(data), nonsmooth=nonsmooth, dim=data.n,
        x0=np.zeros([data.n]), data=data, metadata=metadata
    )


def make_group_lasso(seed, k):
    """Create a seeded group lasso instance.

    The instance has `n = 25k` variables and `m = 16k` observations.
    The entries of `A` and `b` are uniform on [0, 1], the weight is
    `lam = 1` and the groups are drawn by `random_group_partition`.

    Arguments:
        seed: A non-negative integer.
        k: A positive integer scale.

    Returns:
        problem: A `CompositeProblem` starting at zero.
        data: The `DenseLeastSquaresData`.
        spec: The `RegularizerSpec`.

    """
    if k < 1:
        raise ValueError("The argument `k` must be a positive integer.")
    n = 25 * k
    m = 16 * k
    rng = make_rng(seed)
    A = rng.uniform(0., 1., size=(m, n))
    b = rng.uniform(0., 1., size=m)
    groups = random_group_partition(rng, n)
    data = DenseLeastSquaresData(A=A, b=b)
    spec = RegularizerSpec.group_l21(1., groups, n)
    metadata = {
        'family': 'group-lasso', 'seed': int(seed), 'scale': {'k': int(k)}
    }
    return _least_squares_problem(data, spec, metadata), data, spec


def make_lasso(seed, n, m, lam=.1):
    """Create a seeded lasso instance.

    The entries of `A` and `b` are independent standard normal.

    Arguments:
        seed: A non-negative integer.
        n: The number of variables.
        m: The number of observations.
        lam (optional): The positive weight of the l1 term.

    Returns:
        problem: A `CompositeProblem` starting at zero.
        data: The `DenseLeastSquaresData`.
        spec: The `RegularizerSpec`.

    """
    if n < 1 or m < 1:
        raise ValueError(
            "The arguments `n` and `m` must be positive integers."
        )
    rng = make_rng(seed)
    A = rng.standard_normal(size=(m, n))
    b = rng.standard_normal(size=m)
    data = DenseLeastSquaresData(A=A, b=b)
    spec = RegularizerSpec.l1(lam)
    metadata = {
        'family': 'lasso', 'seed': int(seed),
        'scale': {'n': int(n), 'm': int(m), 'lambda': float(lam)}
    }
    return _least_squares_problem(data, spec, metadata), data, spec


def lipschitz_constant(data):
    """Return the largest eigenvalue of `A^T A`."""
    return float(np.linalg.norm(data.A, ord=2)**2)
