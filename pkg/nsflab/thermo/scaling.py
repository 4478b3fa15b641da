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

from dataclasses import dataclass

import numpy as np

from ..utility.exceptions import DomainError
from ..utility.utils import require


@dataclass(frozen=True)
class ScalingParams:
    """
    The four singular parameters of the vanishing dissipation limit.

    a: radiation constant, nu: viscosity scale, omega: conductivity scale,
    lam: damping rate of the -lam u momentum sink.
    """
    a: float = 0.0
    nu: float = 0.0
    omega: float = 0.0
    lam: float = 0.0

    def __post_init__(self):
        values = (self.a, self.nu, self.omega, self.lam)
        require(all(np.isfinite(v) for v in values), "scaling parameters should be finite", DomainError)
        require(all(v >= 0 for v in values), "scaling parameters should not be negative", DomainError)

    def require_dissipative(self):
        """a, nu and omega must be strictly positive for a Navier-Stokes-Fourier run"""
        require(self.a > 0 and self.nu > 0 and self.omega > 0,
                "a, nu and omega should be greater than 0 in an NSF run", DomainError,
                a=self.a, nu=self.nu, omega=self.omega)

    @classmethod
    def on_path(cls, a: float, alpha: float, beta: float, gamma: float) -> 'ScalingParams':
        """nu = a^alpha, omega = a^beta, lam = a^gamma"""
        return cls(a=a, nu=a ** alpha, omega=a ** beta, lam=a ** gamma)

    def as_dict(self) -> dict:
        return {'a': self.a, 'nu': self.nu, 'omega': self.omega, 'lambda': self.lam}
