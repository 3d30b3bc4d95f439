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
"""Module for testing spectral_split.py."""

import numpy as np
import pytest

from proxqn.lmqn import CompactRep
from proxqn.lmqn import PairBuffer
from proxqn.lmqn import QuasiNewtonKind
from proxqn.lmqn import SpectralSplit
from proxqn.lmqn import SpectralSplitError
from proxqn.lmqn import apply_B
from proxqn.lmqn import build_compact
from proxqn.lmqn import eigensplit
from proxqn.lmqn import push_pair


@pytest.fixture
def A():
    return np.random.default_rng(1).standard_normal((5, 2))


def test_signed_split(A):
    rep = CompactRep(
        gamma=1., A=A, Q=np.diag([2., -3.]), kind=QuasiNewtonKind.SR1
    )
    split = eigensplit(rep)
    assert split.r1 == 1
    assert split.r2 == 1
    assert split.dropped == 0
    np.testing.assert_allclose(
        split.U1 @ split.U1.T, np.outer(A[:, 0], A[:, 0]) / 2.
    )
    np.testing.assert_allclose(
        split.U2 @ split.U2.T, np.outer(A[:, 1], A[:, 1]) / 3.
    )


def test_drops_small_eigenvalues(A):
    rep = CompactRep(
        gamma=1., A=A, Q=np.diag([1., 1e-12]), kind=QuasiNewtonKind.SR1
    )
    split = eigensplit(rep)
    assert split.r1 == 1
    assert split.r2 == 0
    assert split.dropped == 1


@pytest.mark.parametrize("kind", list(QuasiNewtonKind))
def test_split_reproduces_B(kind):
    n = 9
    rng = np.random.default_rng(5)
    Z = rng.standard_normal((n, n))
    H = Z @ Z.T + np.eye(n)
    buf = PairBuffer(memory=4)
    for _ in range(4):
        s = rng.standard_normal(n)
        push_pair(buf, s, H @ s, kind)
    rep = build_compact(buf, .7, kind)
    split = eigensplit(rep)
    B = apply_B(rep, np.eye(n))
    np.testing.assert_allclose(
        split.apply(.7, np.eye(n)), B, rtol=1e-7, atol=1e-7 * np.abs(B).max()
    )
    if kind is QuasiNewtonKind.BFGS:
        assert split.r1 == 4
        assert split.r2 == 4



@pytest.mark.parametrize("scale", [1., 1e-2, 1e-4, 1e-5])
def test_short_steps_keep_curvature(scale):
    """Test that pairs from short steps are not discarded."""
    n = 9
    rng = np.random.default_rng(5)
    Z = rng.standard_normal((n, n))
    H = Z @ Z.T + np.eye(n)
    steps = rng.standard_normal((4, n))
    buffers = []
    for c in (1., scale):
        buf = PairBuffer(memory=4)
        for s in steps:
            push_pair(buf, c * s, c * (H @ s), QuasiNewtonKind.BFGS)
        buffers.append(buf)
    B_ref = apply_B(
        build_compact(buffers[0], .7, QuasiNewtonKind.BFGS), np.eye(n)
    )
    split = eigensplit(build_compact(buffers[1], .7, QuasiNewtonKind.BFGS))
    assert split.r1 == 4
    assert split.r2 == 4
    assert split.dropped == 0
    np.testing.assert_allclose(
        split.apply(.7, np.eye(n)), B_ref, rtol=1e-6,
        atol=1e-6 * np.abs(B_ref).max()
    )


def test_empty():
    rep = build_compact(
        PairBuffer(memory=2, dim=3), 1., QuasiNewtonKind.BFGS
    )
    split = eigensplit(rep)
    assert split.U1.shape == (3, 0)
    assert split.U2.shape == (3, 0)
    v = np.ones(3)
    np.testing.assert_array_equal(split.apply(2., v), 2. * v)
    np.testing.assert_array_equal(
        SpectralSplit.empty(3).apply(2., v), 2. * v
    )


def test_not_finite(A):
    rep = CompactRep(
        gamma=1., A=A, Q=np.array([[np.nan, 0.], [0., 1.]]),
        kind=QuasiNewtonKind.SR1
    )
    with pytest.raises(SpectralSplitError):
        eigensplit(rep)
