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
"""Module for termination rules shared by all solvers.

Classes:
    ResidualStop: Stop once `||r(x)|| <= tol`.
    ObjectiveErrorStop: Stop once the objective value error
        `(psi - psi_star) / max(1, |psi_star|)` is at most `tol`.
    TargetValueStop: Stop once `psi <= psi_target`.

Functions:
    stop_to_dict: Serialize a rule.
    stop_from_dict: Deserialize a rule.
    reference_value: The reference objective value of a rule, if any.

"""

import dataclasses

from proxqn.utils.metrics import objective_error


@dataclasses.dataclass(frozen=True)
class ResidualStop(object):
    """Stop once the residual norm is at most `tol`."""

    tol: float = 1e-6
    name = 'residual'
    needs_residual = True

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("The argument `tol` must be positive.")

    def satisfied(self, psi, res_norm):
        return res_norm <= self.tol


@dataclasses.dataclass(frozen=True)
class ObjectiveErrorStop(object):
    """Stop once the objective value error is at most `tol`."""

    psi_star: float
    tol: float = 1e-6
    name = 'objective-error'
    needs_residual = False

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("The argument `tol` must be positive.")

    def satisfied(self, psi, res_norm):
        return objective_error(psi, self.psi_star) <= self.tol


@dataclasses.dataclass(frozen=True)
class TargetValueStop(object):
    """Stop once the objective value is at most `psi_target`."""

    psi_target: float
    name = 'target-value'
    needs_residual = False

    def satisfied(self, psi, res_norm):
        return psi <= self.psi_target


_STOP_CLASSES = {
    cls.name: cls
    for cls in (ResidualStop, ObjectiveErrorStop, TargetValueStop)
}


def stop_to_dict(stop):
    """Return a JSON-serializable dictionary describing `stop`."""
    d = dataclasses.asdict(stop)
    d['name'] = stop.name
    return d


def stop_from_dict(d):
    """Create a stop rule from a dictionary made by `stop_to_dict`."""
    d = dict(d)
    name = d.pop('name')
    try:
        cls = _STOP_CLASSES[name]
    except KeyError:
        raise ValueError(
            "Unknown stop rule '{0}'. Use one of: {1}.".format(
                name, ', '.join(sorted(_STOP_CLASSES))
            )
        )
    return cls(**d)


def reference_value(stop):
    """Return the reference objective value carried by `stop` (or None)."""
    if isinstance(stop, ObjectiveErrorStop):
        return stop.psi_star
    return None
