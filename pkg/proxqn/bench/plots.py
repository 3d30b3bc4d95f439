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
"""Module of benchmark plots.

Functions:
    plot_convergence: Objective value error against run time.
    plot_sweep: Time to tolerance against problem dimension.

"""

import numpy as np


def plot_convergence(ax, curves, tol=None):
    """Plot objective value error against run time on a log scale.

    Arguments:
        ax: A Matplotlib Axes object.
        curves: A dictionary mapping a label to a pair of arrays
            `(time_s, obj_err)`.
        tol (optional): Draw the tolerance as a horizontal line.

    """
    for label, (time_s, obj_err) in curves.items():
        time_s = np.asarray(time_s, dtype=float)
        obj_err = np.asarray(obj_err, dtype=float)
        keep = np.isfinite(obj_err) & (obj_err > 0)
        ax.plot(time_s[keep], obj_err[keep], label=label)
    if tol is not None:
        ax.axhline(tol, color='k', linestyle=':', linewidth=1)
    ax.set_yscale('log')
    ax.set_xlabel('Run time (s)')
    ax.set_ylabel('Objective value error')
    ax.legend()


def plot_sweep(ax, frame):
    """Plot mean time to tolerance against dimension per solver.

    Arguments:
        ax: A Matplotlib Axes object.
        frame: A `pandas.DataFrame` with the columns `solver_label`,
            `n` and `time_to_tol`.

    """
    for label, group in frame.groupby('solver_label'):
        group = group.sort_values('n')
        ax.plot(group['n'], group['time_to_tol'], marker='o', label=label)
    ax.set_xscale('log')
    ax.set_yscale('log')
    ax.set_xlabel('Dimension n')
    ax.set_ylabel('Time to tolerance (s)')
    ax.legend()
