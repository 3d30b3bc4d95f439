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
"""Module for reference optimal values.

Functions:
    psi_star_path: Location of a cached reference value.
    compute_psi_star: Compute (or read) a high-accuracy reference value.

"""

import json
import logging
import os
import warnings

from proxqn.bench.run_spec import scale_tag
from proxqn.lmqn.pair_buffer import QuasiNewtonKind
from proxqn.rpqn.config import RpqnConfig
from proxqn.rpqn.records import SolveStatus
from proxqn.rpqn.driver import solve

logger = logging.getLogger(__name__)


def psi_star_path(cache_dir, family, scale, seed):
    """Return `<cache_dir>/<family>/<scale tag>/<seed>/psistar.json`."""
    return os.path.join(
        cache_dir, family, scale_tag(family, scale), str(seed),
        'psistar.json'
    )


def compute_psi_star(
        problem, seed=None, cache_dir=None, max_iter=100000, tol_r=1e-10,
        memory=5):
    """Return a high-accuracy approximation of the optimal value.

    The regularized proximal quasi-Newton method with BFGS updates is
    run from `problem.x0` until `||r(x)|| <= tol_r`. If the problem
    carries `family` and `scale` metadata and `cache_dir` is given,
    the value is cached and later calls read it back.

    Arguments:
        problem: A `CompositeProblem`. Its counter is left untouched.
        seed (optional): The instance seed (taken from the metadata if
            None).
        cache_dir (optional): The cache root directory.
        max_iter (optional): Iteration limit of the reference run.
        tol_r (optional): Residual tolerance of the reference run.
        memory (optional): Pair memory of the reference run.

    Returns:
        psi_star: The final objective value of the reference run.

    Raises:
        OSError: If the cache cannot be read or written.

    """
    if seed is None:
        seed = problem.metadata.get('seed')
    family = problem.metadata.get('family')
    scale = problem.metadata.get('scale')
    filepath = None
    if cache_dir is not None and family is not None and seed is not None:
        filepath = psi_star_path(cache_dir, family, scale, seed)
        if os.path.exists(filepath):
            try:
                with open(filepath) as f:
                    cached = json.load(f)
            except (OSError, ValueError) as e:
                raise OSError(
                    "Unable to read cached reference value {0}: {1}".format(
                        filepath, e
                    )
                ) from e
            logger.info('Reference value cache hit: %s', filepath)
            return float(cached['psi_star'])
        logger.info('Reference value cache miss: %s', filepath)

    config = RpqnConfig(
        kind=QuasiNewtonKind.BFGS, memory=memory, tol_r=tol_r,
        max_iter=max_iter
    )
    _, trace, status = solve(problem.with_x0(problem.x0), config=config)
    psi_star = float(min(trace.column('psi')))
    converged = status is SolveStatus.CONVERGED
    if not converged:
        warnings.warn(
            "The reference run ended with status '{0}' and residual norm "
            "{1:.3e}; the reference value may be inaccurate.".format(
                status.value, trace.final['res_norm']
            )
        )

    if filepath is not None:
        record = {
            'psi_star': psi_star,
            'status': status.value,
            'converged': converged,
            'iterations': len(trace) - 1,
            'res_norm': float(trace.final['res_norm']),
            'tol_r': tol_r,
        }
        try:
            os.makedirs(os.path.dirname(filepath), exist_ok=True)
            with open(filepath, 'w') as f:
                json.dump(record, f, indent=2)
        except OSError as e:
            raise OSError(
                "Unable to write reference value {0}: {1}".format(filepath, e)
            ) from e
        logger.info('Reference value written: %s', filepath)
    return psi_star
