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

from ..grid_fields.norms import integral
from ..utility.exceptions import DomainError
from ..utility.utils import require


@dataclass(frozen=True)
class DataBounds:
    """
    M: lower bound on the initial mass, D: upper bound on the sup norms of (rho0, theta0, u0)
    """
    M: float
    D: float

    def __post_init__(self):
        require(self.M > 0, "initial mass bound M should be greater than 0", DomainError, M=self.M)
        require(np.isfinite(self.D), "initial data bound D should be finite", DomainError, D=self.D)

    @classmethod
    def from_primitive(cls, primitive) -> 'DataBounds':
        """Records M and D from actual initial data"""
        require(bool(np.all(primitive.rho > 0)) and bool(np.all(primitive.theta > 0)),
                "initial density and temperature should be greater than 0", DomainError)
        mass = integral(primitive.rho, primitive.grid)
        sup = (float(np.max(np.abs(primitive.rho))) + float(np.max(np.abs(primitive.theta)))
               + float(np.max(np.sqrt(np.sum(primitive.u ** 2, axis=0)))))
        return cls(M=mass, D=sup)

    def as_dict(self) -> dict:
        return {'M': self.M, 'D': self.D}
