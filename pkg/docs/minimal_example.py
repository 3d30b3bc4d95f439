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
"""Minimal example: group lasso with limited-memory BFGS."""

import proxqn


def main():
    """Solve a seeded group lasso instance."""
    problem, _, _ = proxqn.problems.make_group_lasso(seed=1, k=4)
    config = proxqn.rpqn.RpqnConfig(kind='bfgs', memory=3, tol_r=1e-6)
    x, trace, status = proxqn.rpqn.solve(problem, config=config)

    summary = trace.summary()
    print('Status: {0}'.format(status.value))
    print('Objective: {0:.10f}'.format(trace.final['psi']))
    print(
        'Iterations: {0} ({1} unsuccessful), gradient evaluations: '
        '{2}'.format(
            summary['iter'], summary['unsucc_iter'],
            summary['gradient_eval']
        )
    )


if __name__ == "__main__":
    main()
