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
"""Problems initialization file."""

from proxqn.problems.blur import gaussian_blur_adjoint
from proxqn.problems.blur import gaussian_blur_apply
from proxqn.problems.blur import gaussian_kernel
from proxqn.problems.composite_problem import CompositeProblem
from proxqn.problems.composite_problem import eval_objective
from proxqn.problems.haar import haar2d
from proxqn.problems.haar import haar2d_inverse
from proxqn.problems.instance_io import load_instance
from proxqn.problems.instance_io import save_instance
from proxqn.problems.least_squares import DenseLeastSquaresData
from proxqn.problems.least_squares import lipschitz_constant
from proxqn.problems.least_squares import make_group_lasso
from proxqn.problems.least_squares import make_lasso
from proxqn.problems.least_squares import random_group_partition
from proxqn.problems.random_state import make_rng
from proxqn.problems.regularizer import RegularizerKind
from proxqn.problems.regularizer import RegularizerSpec
from proxqn.problems.regularizer import eval_regularizer
from proxqn.problems.restoration import RestorationData
from proxqn.problems.restoration import make_student_t_restoration
from proxqn.problems.restoration import synthetic_image
from proxqn.problems.smooth import FunctionSmooth
from proxqn.problems.smooth import LeastSquaresSmooth
from proxqn.problems.smooth import SmoothOracle
from proxqn.problems.smooth import StudentTSmooth
