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
"""Module for structured nonsmooth regularizers.

Classes:
    RegularizerKind: Enumeration of the supported regularizers.
    RegularizerSpec: An immutable description of a regularizer.

Functions:
    eval_regularizer: Evaluate a regularizer at a point.

Notes:
    Group indices are zero-based.

"""

import dataclasses
import enum
import functools

import numpy as np
import scipy.sparse


class RegularizerKind(enum.Enum):
    """Supported regularizers."""

    ZERO = 'zero'
    L1 = 'l1'
    GROUP_L21 = 'group-l21'


def _check_groups(groups, dim):
    """Check that `groups` is a partition of `range(dim)`."""
    if dim is None or dim < 1:
        raise ValueError(
            "The argument `n` must be a positive integer."
        )
    count = np.zeros([dim], dtype=int)
    for group in groups:
        if len(group) == 0:
            raise ValueError(
                "The argument `groups` must not contain empty groups."
            )
        idx = np.asarray(group, dtype=int)
        if np.any(idx < 0) or np.any(idx >= dim):
            raise ValueError(
                "The argument `groups` contains indices outside of "
                "[0, {0}).".format(dim)
            )
        np.add.at(count, idx, 1)
    if np.any(count != 1):
        raise ValueError(
            "The argument `groups` must partition the indices "
            "0, ..., {0} exactly once.".format(dim - 1)
        )


@dataclasses.dataclass(frozen=True, eq=False)
class RegularizerSpec(object):
    """An immutable description of a nonsmooth regularizer.

    Use the constructors `zero`, `l1` and `group_l21` rather than
    instantiating directly.

    Attributes:
        kind: A `RegularizerKind`.
        lam: The regularization weight (0 for `ZERO`).
        groups: A tuple of index tuples partitioning `range(dim)`
            (`GROUP_L21` only).
        dim: The dimension the partition refers to (`GROUP_L21`
            only).

    """

    kind: RegularizerKind
    lam: float = 0.
    groups: tuple = None
    dim: int = None

    def __post_init__(self):
        if self.kind is RegularizerKind.ZERO:
            return
        if not np.isfinite(self.lam) or self.lam <= 0:
            raise ValueError(
                "The argument `lam` must be a positive real number."
            )
        if self.kind is RegularizerKind.GROUP_L21:
            _check_groups(self.groups, self.dim)

    @classmethod
    def zero(cls):
        """Return the zero regularizer."""
        return cls(kind=RegularizerKind.ZERO)

    @classmethod
    def l1(cls, lam):
        """Return the regularizer `lam * ||x||_1`."""
        return cls(kind=RegularizerKind.L1, lam=float(lam))

    @classmethod
    def group_l21(cls, lam, groups, n):
        """Return the regularizer `lam * sum_j ||x_{I_j}||_2`.

        Arguments:
            lam: A positive weight.
            groups: An iterable of index iterables partitioning
                `range(n)`.
            n: The dimension.

        """
        groups = tuple(tuple(int(i) for i in group) for group in groups)
        return cls(
            kind=RegularizerKind.GROUP_L21, lam=float(lam), groups=groups,
            dim=int(n)
        )

    @property
    def n_group(self):
        """Return the number of groups."""
        if self.groups is None:
            return 0
        return len(self.groups)

    @functools.cached_property
    def group_ids(self):
        """Return an array mapping each index to its group."""
        ids = np.empty([self.dim], dtype=int)
        for i_group, group in enumerate(self.groups):
            ids[list(group)] = i_group
        return ids

    @functools.cached_property
    def membership(self):
        """Return the sparse (n_group, dim) group membership matrix."""
        return scipy.sparse.csr_matrix(
            (np.ones([self.dim]), (self.group_ids, np.arange(self.dim))),
            shape=(self.n_group, self.dim)
        )

    def group_norms(self, x):
        """Return the Euclidean norm of every group of `x`."""
        return np.sqrt(self.membership @ (x * x))

    def check_dim(self, n):
        """Raise `ValueError` if the spec does not fit dimension `n`."""
        if self.kind is RegularizerKind.GROUP_L21 and self.dim != n:
            raise ValueError(
                "The group partition covers {0} indices, but the problem "
                "has dimension {1}.".format(self.dim, n)
            )

    def to_dict(self):
        """Return a JSON-serializable dictionary."""
        d = {'kind': self.kind.value, 'lambda': self.lam}
        if self.kind is RegularizerKind.GROUP_L21:
            d['groups'] = [list(group) for group in self.groups]
            d['n'] = self.dim
        return d

    @classmethod
    def from_dict(cls, d):
        """Create a spec from a dictionary made by `to_dict`."""
        kind = RegularizerKind(d['kind'])
        if kind is RegularizerKind.ZERO:
            return cls.zero()
        if kind is RegularizerKind.L1:
            return cls.l1(d['lambda'])
        return cls.group_l21(d['lambda'], d['groups'], d['n'])


def eval_regularizer(spec, x):
    """Evaluate a regularizer.

    Arguments:
        spec: A `RegularizerSpec`.
        x: A 1D array.

    Returns:
        The value `phi(x)`.

    Raises:
        ValueError: If `x` does not match the group partition.

    """
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise ValueError("The argument `x` must be a 1D array.")
    spec.check_dim(x.shape[0])
    if spec.kind is RegularizerKind.ZERO:
        return 0.
    if spec.kind is RegularizerKind.L1:
        return spec.lam * float(np.sum(np.abs(x)))
    return spec.lam * float(np.sum(spec.group_norms(x)))
