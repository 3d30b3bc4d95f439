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
"""Module for the configuration of the regularized proximal
quasi-Newton solver.

Classes:
    RpqnConfig: Tuning constants and termination settings.

"""

import dataclasses

from proxqn.lmqn.pair_buffer import QuasiNewtonKind
from proxqn.rpqn.stopping import ResidualStop
from proxqn.rpqn.stopping import stop_from_dict
from proxqn.rpqn.stopping import stop_to_dict


@dataclasses.dataclass(frozen=True)
class RpqnConfig(object):
    """Configuration of `proxqn.rpqn.driver`.

    Attributes:
        mu0: Initial regularization parameter.
        p_min: Constant of the sufficient-prediction test
            `pred > p_min ||d|| ||r(x)||`.
        c1: Ratio threshold below which a step is unsuccessful.
        c2: Ratio threshold above which a step is highly successful.
        sigma1: Factor applied to `mu` after a highly successful step.
        sigma2: Factor applied to `mu` after an unsuccessful step.
        eps_skip: Tolerance of the BFGS pair skip rule.
        eps_split: Eigenvalues of the middle matrix with magnitude at
            most `eps_split` times the largest magnitude are dropped.
        memory: Number of stored curvature pairs.
        kind: 'bfgs' or 'sr1' (or a `QuasiNewtonKind`).
        tol_r: Residual tolerance used when `stop` is None.
        max_iter: Maximum number of iterations.
        stop: A stop rule; defaults to `ResidualStop(tol_r)`.
        newton_tol: Tolerance of the inner semismooth Newton method.
        newton_maxit: Iteration limit of the inner Newton method.
        max_time_s: Optional wall-clock budget in seconds.
        reset_memory_on_failure: Clear the pair buffer after every
            unsuccessful step.
        mu_min: Lower bound of `mu` after a highly successful step.
        mu_max: Runs whose `mu` exceeds this value end as stalled.
        verbose: Print one progress line every `verbose` iterations
            (0 is silent).

    """

    mu0: float = 1.
    p_min: float = 1e-4
    c1: float = 1e-4
    c2: float = .9
    sigma1: float = .5
    sigma2: float = 4.
    eps_skip: float = 1e-8
    eps_split: float = 1e-8
    memory: int = 5
    kind: QuasiNewtonKind = QuasiNewtonKind.BFGS
    tol_r: float = 1e-6
    max_iter: int = 1000
    stop: object = None
    newton_tol: float = 1e-10
    newton_maxit: int = 10
    max_time_s: float = None
    reset_memory_on_failure: bool = False
    mu_min: float = 1e-12
    mu_max: float = 1e20
    verbose: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'kind', QuasiNewtonKind(self.kind))
        if not self.mu0 > 0:
            raise ValueError("The argument `mu0` must be positive.")
        if not 0 < self.p_min < .5:
            raise ValueError("The argument `p_min` must lie in (0, 1/2).")
        if not 0 < self.c1 < .5:
            raise ValueError("The argument `c1` must lie in (0, 1/2).")
        if not self.c1 < self.c2 < 1:
            raise ValueError("The argument `c2` must lie in (c1, 1).")
        if not 0 < self.sigma1 < 1:
            raise ValueError("The argument `sigma1` must lie in (0, 1).")
        if not self.sigma2 > 1:
            raise ValueError("The argument `sigma2` must be greater than 1.")
        if not self.eps_skip > 0:
            raise ValueError("The argument `eps_skip` must be positive.")
        if not self.eps_split > 0:
            raise ValueError("The argument `eps_split` must be positive.")
        if int(self.memory) != self.memory or self.memory < 0:
            raise ValueError(
                "The argument `memory` must be a non-negative integer."
            )
        if not self.tol_r > 0:
            raise ValueError("The argument `tol_r` must be positive.")
        if int(self.max_iter) != self.max_iter or self.max_iter < 0:
            raise ValueError(
                "The argument `max_iter` must be a non-negative integer."
            )
        if not self.newton_tol > 0:
            raise ValueError("The argument `newton_tol` must be positive.")
        if self.newton_maxit < 1:
            raise ValueError("The argument `newton_maxit` must be positive.")
        if self.max_time_s is not None and not self.max_time_s > 0:
            raise ValueError("The argument `max_time_s` must be positive.")
        if not 0 < self.mu_min <= self.mu0:
            raise ValueError("The argument `mu_min` must lie in (0, mu0].")
        if not self.mu_max > self.mu0:
            raise ValueError("The argument `mu_max` must exceed `mu0`.")

    @property
    def stop_rule(self):
        """Return the effective stop rule."""
        if self.stop is None:
            return ResidualStop(self.tol_r)
        return self.stop

    def to_dict(self):
        """Return a JSON-serializable dictionary."""
        d = dataclasses.asdict(self)
        d['kind'] = self.kind.value
        d['stop'] = None if self.stop is None else stop_to_dict(self.stop)
        return d

    @classmethod
    def from_dict(cls, d):
        """Create a config from a dictionary made by `to_dict`."""
        d = dict(d)
        if d.get('stop') is not None:
            d['stop'] = stop_from_dict(d['stop'])
        return cls(**d)
