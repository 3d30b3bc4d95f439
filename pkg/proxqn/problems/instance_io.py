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
"""Module for saving and loading problem instances.

Functions:
    save_instance: Save an instance as CSV matrices plus a JSON sidecar.
    load_instance: Load an instance saved by `save_instance`.

Notes:
    Matrices are written one row per line, comma-separated, with 17
    significant digits so that loading reproduces the values exactly.

"""

import json
import os

import numpy as np

from proxqn.problems.blur import gaussian_kernel
from proxqn.problems.composite_problem import CompositeProblem
from proxqn.problems.haar import haar2d
from proxqn.problems.least_squares import DenseLeastSquaresData
from proxqn.problems.regularizer import RegularizerKind
from proxqn.problems.regularizer import RegularizerSpec
from proxqn.problems.restoration import RestorationData
from proxqn.problems.smooth import LeastSquaresSmooth
from proxqn.problems.smooth import StudentTSmooth

SIDECAR_NAME = 'instance.json'


def _write_matrix(filepath, matrix):
    try:
        np.savetxt(filepath, np.atleast_2d(matrix), delimiter=',', fmt='%.17g')
    except OSError as e:
        raise OSError(
            "Unable to write {0}: {1}".format(filepath, e)
        ) from e


def _read_matrix(filepath):
    if not os.path.exists(filepath):
        raise OSError("Missing instance file {0}.".format(filepath))
    return np.loadtxt(filepath, delimiter=',', ndmin=2)


def save_instance(problem, directory):
    """Save a generated instance.

    Least squares instances are written as `A.csv` and `b.csv`;
    restoration instances as `observed.csv` and `true_image.csv`. In
    both cases `instance.json` records `n`, `m`, `lambda`, `groups`,
    `seed` and `family` together with the remaining metadata.

    Arguments:
        problem: A `CompositeProblem` created by one of the generators.
        directory: The destination directory (created if needed).

    Raises:
        OSError: If a file cannot be written.
        ValueError: If the problem carries no savable data.

    """
    os.makedirs(directory, exist_ok=True)
    spec = problem.nonsmooth
    groups = None
    if spec.kind is RegularizerKind.GROUP_L21:
        groups = [list(group) for group in spec.groups]
    sidecar = {
        'family': problem.metadata.get('family'),
        'seed': problem.metadata.get('seed'),
        'n': problem.dim,
        'lambda': spec.lam,
        'groups': groups,
        'scale': problem.metadata.get('scale', {}),
    }

    data = problem.data
    if isinstance(data, DenseLeastSquaresData):
        sidecar['m'] = data.m
        _write_matrix(os.path.join(directory, 'A.csv'), data.A)
        _write_matrix(os.path.join(directory, 'b.csv'), data.b[:, np.newaxis])
    elif isinstance(data, RestorationData):
        sidecar['m'] = problem.dim
        sidecar['side'] = data.side
        sidecar['levels'] = data.levels
        sidecar['psi_reference'] = problem.metadata.get('psi_reference')
        _write_matrix(os.path.join(directory, 'observed.csv'), data.observed)
        _write_matrix(
            os.path.join(directory, 'true_image.csv'), data.true_image
        )
    else:
        raise ValueError(
            "The problem does not carry generator data and cannot be saved."
        )

    filepath = os.path.join(directory, SIDECAR_NAME)
    try:
        with open(filepath, 'w') as f:
            json.dump(sidecar, f, indent=2)
    except OSError as e:
        raise OSError("Unable to write {0}: {1}".format(filepath, e)) from e


def load_instance(directory):
    """Load an instance saved by `save_instance`.

    Arguments:
        directory: The instance directory.

    Returns:
        problem: A `CompositeProblem` equal to the saved one.

    Raises:
        OSError: If a file is missing or unreadable.

    """
    filepath = os.path.join(directory, SIDECAR_NAME)
    try:
        with open(filepath) as f:
            sidecar = json.load(f)
    except OSError as e:
        raise OSError("Unable to read {0}: {1}".format(filepath, e)) from e

    n = int(sidecar['n'])
    if sidecar['groups'] is not None:
        spec = RegularizerSpec.group_l21(
            sidecar['lambda'], sidecar['groups'], n
        )
    elif sidecar['lambda'] > 0:
        spec = RegularizerSpec.l1(sidecar['lambda'])
    else:
        spec = RegularizerSpec.zero()
    metadata = {
        'family': sidecar['family'], 'seed': sidecar['seed'],
        'scale': sidecar.get('scale', {})
    }

    if sidecar['family'] == 'student-t':
        side = int(sidecar['side'])
        levels = int(sidecar['levels'])
        kernel = gaussian_kernel()
        observed = _read_matrix(os.path.join(directory, 'observed.csv'))
        true_image = _read_matrix(os.path.join(directory, 'true_image.csv'))
        data = RestorationData(
            true_image=true_image, observed=observed, side=side,
            levels=levels, kernel=kernel
        )
        metadata['psi_reference'] = sidecar.get('psi_reference')
        return CompositeProblem(
            smooth=StudentTSmooth(observed.ravel(), side, levels, kernel),
            nonsmooth=spec, dim=n, x0=haar2d(observed, levels=levels),
            data=data, metadata=metadata
        )

    A = _read_matrix(os.path.join(directory, 'A.csv'))
    b = _read_matrix(os.path.join(directory, 'b.csv'))[:, 0]
    data = DenseLeastSquaresData(A=A, b=b)
    return CompositeProblem(
        smooth=LeastSquaresSmooth(data), nonsmooth=spec, dim=n,
        x0=np.zeros([n]), data=data, metadata=metadata
    )
