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

from dataclasses import dataclass, replace
from typing import Callable

from ..grid_fields.grid import Grid
from ..thermo.scaling import ScalingParams
from ..utility.exceptions import UsageError
from ..utility.utils import require

RECONSTRUCTIONS = ('linear', 'minmod', 'constant')
MAX_CFL = 0.9
FLOOR_RATIO = 1e-8
UNHEALTHY_FRACTION = 1e-3


@dataclass(frozen=True)
class NsfRunConfig:
    """
    Everything an NSF run needs besides its initial data.

    forcing, when given, is called as forcing(t) and returns the source terms
    (f_rho, f_mom, f_etot) on the interior cells; it is used by manufactured solutions.
    """
    gas: object
    transport: object
    scaling: ScalingParams
    grid: Grid
    cfl: float = 0.5
    t_end: float = 0.1
    output_stride: int = 10
    rho_floor: float = 1e-10
    theta_floor: float = 1e-10
    reconstruction: str = 'linear'
    forcing: Callable = None
    dt: float = None

    def __post_init__(self):
        require(0 < self.cfl <= MAX_CFL, f"cfl should be in (0, {MAX_CFL}]", UsageError, cfl=self.cfl)
        require(self.t_end > 0, "t_end should be greater than 0")
        require(int(self.output_stride) >= 1, "output.stride should be at least 1")
        require(self.rho_floor > 0 and self.theta_floor > 0, "floors should be greater than 0")
        require(self.reconstruction in RECONSTRUCTIONS, f"reconstruction should be one of {RECONSTRUCTIONS}")
        require(self.dt is None or self.dt > 0, "a fixed dt should be greater than 0")

    @property
    def a(self) -> float:
        return self.scaling.a

    def with_scaling(self, scaling: ScalingParams) -> 'NsfRunConfig':
        return replace(self, scaling=scaling)

    def with_grid(self, grid: Grid) -> 'NsfRunConfig':
        return replace(self, grid=grid)

    def check_floors(self, rho_min: float, theta_min: float):
        """Floors must stay at most FLOOR_RATIO of the initial minima"""
        require(self.rho_floor <= FLOOR_RATIO * rho_min and self.theta_floor <= FLOOR_RATIO * theta_min,
                "positivity floors should not exceed 1e-8 of the initial minima", UsageError,
                rho_floor=self.rho_floor, theta_floor=self.theta_floor, rho_min=rho_min, theta_min=theta_min)
