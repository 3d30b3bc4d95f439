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
    write_pgm: Write a grayscale image as a binary PGM file.

"""

from pathlib import Path

import numpy as np
from PIL import Image


def write_pgm(image, filepath, vmin=0., vmax=1.):
    """Write a grayscale image to disk in binary PGM (P5) format.

    Intensities are clipped to `[vmin, vmax]` and mapped linearly onto
    the 8-bit range.

    Arguments:
        image: A 2D array.
            shape=(n_row, n_col)
        filepath: The destination path.
        vmin (optional): Intensity mapped to black.
        vmax (optional): Intensity mapped to white.

    Returns:
        The destination path as a `pathlib.Path`.

    Raises:
        ValueError

    """
    image = np.asarray(image, dtype=float)
    if image.ndim != 2:
        raise ValueError("The argument `image` must be a 2D array.")
    if not vmax > vmin:
        raise ValueError(
            "The argument `vmax` must be greater than `vmin`."
        )
    scaled = (np.clip(image, vmin, vmax) - vmin) / (vmax - vmin)
    pixels = np.round(255 * scaled).astype(np.uint8)

    filepath = Path(filepath)
    Image.fromarray(pixels).save(filepath, format='PPM')
    return filepath
