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
"""Module for the Gaussian blur operator and its adjoint.

Functions:
    gaussian_kernel: Return a normalized Gaussian kernel.
    gaussian_blur_apply: Blur a square image.
    gaussian_blur_adjoint: Apply the adjoint of the blur.

Notes:
    The image is extended by symmetric (half-sample) reflection before
    a "valid" correlation with the kernel, so the output has the same
    size as the input and constant images are reproduced exactly. The
    adjoint is the transpose of exactly this map: a "full" convolution
    followed by folding the padded border back onto the image.

"""

import functools

import numpy as np
import scipy.signal
import scipy.sparse

KERNEL_SIZE = 9
KERNEL_SIGMA = 4.


def gaussian_kernel(size=KERNEL_SIZE, sigma=KERNEL_SIGMA):
    """Return a normalized, odd-sized Gaussian kernel.

    Arguments:
        size (optional): The kernel side (odd).
        sigma (optional): The standard deviation in pixels.

    Returns:
        kernel: A `size` x `size` array summing to one.

    """
    if size < 1 or size % 2 != 1:
        raise ValueError("The argument `size` must be a positive odd integer.")
    if sigma <= 0:
        raise ValueError("The argument `sigma` must be positive.")
    half = size // 2
    t = np.arange(-half, half + 1, dtype=float)
    g = np.exp(-t**2 / (2 * sigma**2))
    kernel = np.outer(g, g)
    return kernel / np.sum(kernel)


@functools.lru_cache(maxsize=16)
def _padding_matrix(side, half):
    """Return the sparse (side + 2 half) x side symmetric padding map."""
    idx = np.pad(np.arange(side), half, mode='symmetric')
    return scipy.sparse.csr_matrix(
        (np.ones([idx.size]), (np.arange(idx.size), idx)),
        shape=(idx.size, side)
    )


def _as_image(v, side):
    v = np.asarray(v, dtype=float)
    if v.size != side * side:
        raise ValueError(
            "Expected a vector of length {0}, got {1}.".format(
                side * side, v.size
            )
        )
    return v.reshape(side, side)


def gaussian_blur_apply(v, side, kernel=None):
    """Blur an image given as a flattened vector.

    Arguments:
        v: A 1D array of length `side**2` (row-major image).
        side: The image side.
        kernel (optional): A normalized odd-sized kernel. Defaults to
            the 9 x 9 kernel with standard deviation 4.

    Returns:
        A 1D array of length `side**2`.

    """
    if kernel is None:
        kernel = gaussian_kernel()
    image = _as_image(v, side)
    pad = _padding_matrix(side, kernel.shape[0] // 2)
    padded = pad @ (pad @ image).T
    blurred = scipy.signal.correlate2d(padded.T, kernel, mode='valid')
    return blurred.ravel()


def gaussian_blur_adjoint(v, side, kernel=None):
    """Apply the adjoint of `gaussian_blur_apply`.

    Arguments:
        v: A 1D array of length `side**2`.
        side: The image side.
        kernel (optional): The kernel used by the forward operator.

    Returns:
        A 1D array of length `side**2`.

    """
    if kernel is None:
        kernel = gaussian_kernel()
    image = _as_image(v, side)
    pad = _padding_matrix(side, kernel.shape[0] // 2)
    spread = scipy.signal.convolve2d(image, kernel, mode='full')
    folded = pad.T @ (pad.T @ spread).T
    return np.asarray(folded.T).ravel()
