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
"""Module for the orthonormal two-dimensional Haar wavelet transform.

Functions:
    haar2d: Forward transform of a square image.
    haar2d_inverse: Inverse (and adjoint) transform.

Notes:
    Coefficients are stored in the usual pyramid layout: after each
    level the approximation occupies the top-left quadrant of the
    current block. The returned vector is the row-major flattening of
    that layout.

"""

import numpy as np

_SQRT_HALF = np.sqrt(.5)


def _check_side(side, levels):
    if levels < 0:
        raise ValueError("The argument `levels` must be non-negative.")
    if side < 1 or side % (2**levels) != 0:
        raise ValueError(
            "The image side ({0}) must be divisible by 2**levels "
            "({1}).".format(side, 2**levels)
        )


def _analysis_step(block):
    """Split the rows and then the columns of `block`."""
    lo = (block[:, 0::2] + block[:, 1::2]) * _SQRT_HALF
    hi = (block[:, 0::2] - block[:, 1::2]) * _SQRT_HALF
    block = np.concatenate([lo, hi], axis=1)
    lo = (block[0::2, :] + block[1::2, :]) * _SQRT_HALF
    hi = (block[0::2, :] - block[1::2, :]) * _SQRT_HALF
    return np.concatenate([lo, hi], axis=0)


def _synthesis_step(block):
    """Undo `_analysis_step`."""
    half = block.shape[0] // 2
    out = np.empty_like(block)
    lo = block[:half, :]
    hi = block[half:, :]
    out[0::2, :] = (lo + hi) * _SQRT_HALF
    out[1::2, :] = (lo - hi) * _SQRT_HALF
    block = out
    out = np.empty_like(block)
    lo = block[:, :half]
    hi = block[:, half:]
    out[:, 0::2] = (lo + hi) * _SQRT_HALF
    out[:, 1::2] = (lo - hi) * _SQRT_HALF
    return out


def haar2d(image, levels=4):
    """Forward orthonormal Haar transform.

    Arguments:
        image: A square 2D array whose side is divisible by
            `2**levels`.
        levels (optional): The number of decomposition levels.

    Returns:
        coeffs: A 1D array of length `side**2`.

    Raises:
        ValueError: If the image is not square or its side is
            incompatible with `levels`.

    """
    image = np.asarray(image, dtype=float)
    if image.ndim != 2 or image.shape[0] != image.shape[1]:
        raise ValueError("The argument `image` must be a square matrix.")
    side = image.shape[0]
    _check_side(side, levels)

    coeffs = image.copy()
    size = side
    for _ in range(levels):
        coeffs[:size, :size] = _analysis_step(coeffs[:size, :size])
        size = size // 2
    return coeffs.ravel()


def haar2d_inverse(coeffs, side=None, levels=4):
    """Inverse orthonormal Haar transform.

    Since the transform is orthonormal, this is also its adjoint.

    Arguments:
        coeffs: A 1D array of length `side**2` (or a square matrix in
            the pyramid layout).
        side (optional): The image side. Inferred if not provided.
        levels (optional): The number of decomposition levels.

    Returns:
        image: A `side` x `side` array.

    Raises:
        ValueError

    """
    coeffs = np.asarray(coeffs, dtype=float)
    if side is None:
        side = int(round(np.sqrt(coeffs.size)))
    if side * side != coeffs.size:
        raise ValueError(
            "The argument `coeffs` has {0} entries, which is not "
            "`side**2`.".format(coeffs.size)
        )
    _check_side(side, levels)

    image = coeffs.reshape(side, side).copy()
    size = side // (2**(levels - 1)) if levels > 0 else side
    for _ in range(levels):
        image[:size, :size] = _synthesis_step(image[:size, :size])
        size = size * 2
    return image
