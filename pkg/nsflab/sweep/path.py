# -*- coding: utf-8 -*-
# Copyright 2026 The nsflab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from collections import namedtuple
from dataclasses import dataclass

import numpy as np

from ..thermo.scaling import ScalingParams
from ..utility.utils import require

DEFAULT_A_VALUES = (1e-2, 1e-3, 1e-4)
DEFAULT_EXPONENTS = (0.55, 1.2, 0.1)

PathValidation = namedtuple('PathValidation', 'valid violations')


def _limit_ratios(a_values, alpha: float, beta: float, gamma: float) -> dict:
    a = np.asarray(a_values, dtype=float)
    nu, omega, lam = a ** alpha, a ** beta, a ** gamma
    return {
        'omega/a': omega / a,
        'nu/sqrt(a)': nu / np.sqrt(a),
        'a/sqrt(nu^3 lambda)': a / np.sqrt(nu ** 3 * lam),
    }


def validate_path(alpha: float, beta: float, gamma: float, a_values=DEFAULT_A_VALUES) -> PathValidation:
    """
    Checks beta > 1, 1/2 < alpha < 2/3 and 0 < gamma < 1 - (3/2) alpha, then
    confirms numerically that omega/a, nu/sqrt(a) and a/sqrt(nu^3 lambda)
    decrease strictly along a_values.

    :return: PathValidation(valid, violations); never raises on a violation
    """
    violations = []
    if not beta > 1.0:
        violations.append(f'beta = {beta} should be greater than 1')
    if not 0.5 < alpha < 2.0 / 3.0:
        violations.append(f'alpha = {alpha} should lie in (1/2, 2/3)')
    if not 0.0 < gamma < 1.0 - 1.5 * alpha:
        violations.append(f'gamma = {gamma} should lie in (0, 1 - 3/2 alpha) = (0, {1.0 - 1.5 * alpha:g})')
    if len(a_values) >= 2:
        for name, ratio in _limit_ratios(a_values, alpha, beta, gamma).items():
            if not np.all(np.diff(ratio) < 0):
                violations.append(f'{name} does not decrease along the path')
    return PathValidation(not violations, violations)


@dataclass(frozen=True)
class ScalingPath:
    """
    nu = a^alpha, omega = a^beta, lambda = a^gamma along a strictly decreasing sequence of a
    """
    a_values: tuple = DEFAULT_A_VALUES
    alpha: float = DEFAULT_EXPONENTS[0]
    beta: float = DEFAULT_EXPONENTS[1]
    gamma: float = DEFAULT_EXPONENTS[2]

    def __post_init__(self):
        object.__setattr__(self, 'a_values', tuple(float(a) for a in self.a_values))
        require(len(self.a_values) > 0, "a path needs at least one value of a")
        require(all(a > 0 for a in self.a_values), "path values of a should be greater than 0")
        require(all(x > y for x, y in zip(self.a_values, self.a_values[1:])),
                "path values of a should be strictly decreasing")

    def points(self) -> list:
        return [ScalingParams.on_path(a, self.alpha, self.beta, self.gamma) for a in self.a_values]

    def validate(self) -> PathValidation:
        return validate_path(self.alpha, self.beta, self.gamma, self.a_values)

    def as_dict(self) -> dict:
        return {'a_values': list(self.a_values), 'alpha': self.alpha, 'beta': self.beta, 'gamma': self.gamma}
