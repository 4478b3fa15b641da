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

"""
Compatibility of initial data with the slip condition.

k = 0: u0.n = 0 on the walls, evaluated exactly at the wall faces.
k = 1: d_t (u.n) = 0 on the walls, from the Euler tendencies of the first
       three cells extrapolated to the wall with (15 a0 - 10 a1 + 3 a2) / 8.
k = 2: not checked.
"""

from collections import namedtuple

import numpy as np

from ..grid_fields.grid import Grid
from ..utility.utils import require
from .euler_solver import rhs_euler

K0_ULP = 64.0
K1_FACTOR = 10.0

CompatibilityReport = namedtuple('CompatibilityReport',
                                 'k0_passed k0_max k1_passed k1_residual k1_tolerance k2 accepted')


def _wall_extrapolation(values: np.ndarray, axis: int) -> tuple:
    lower = [np.take(values, i, axis=axis) for i in (0, 1, 2)]
    upper = [np.take(values, -1 - i, axis=axis) for i in (0, 1, 2)]
    return ((15.0 * lower[0] - 10.0 * lower[1] + 3.0 * lower[2]) / 8.0,
            (15.0 * upper[0] - 10.0 * upper[1] + 3.0 * upper[2]) / 8.0)


def compatibility_check(initial, grid: Grid, gas) -> CompatibilityReport:
    """
    :param initial: InitialData
    :param grid: Grid with at least one slip axis
    :param gas: GasModel
    :return: CompatibilityReport; `accepted` mirrors the k = 0 verdict
    """
    require(len(grid.slip_axes) > 0, "compatibility is checked on grids with slip walls")
    primitive = initial.primitive(grid)
    scale = max(1.0, float(np.max(np.abs(primitive.u))))

    k0_max = 0.0
    for axis in grid.slip_axes:
        normal = initial.velocity_at(grid.face_mesh(axis))[axis]
        walls = np.concatenate([np.take(normal, 0, axis=axis).ravel(), np.take(normal, -1, axis=axis).ravel()])
        k0_max = max(k0_max, float(np.max(np.abs(walls))))
    k0_passed = k0_max <= K0_ULP * np.finfo(float).eps * scale

    state = initial.state(grid, gas, 0.0)
    _, d_mom, _ = rhs_euler(state, gas)
    k1_residual = 0.0
    for axis in grid.slip_axes:
        rho_walls = _wall_extrapolation(state.rho, axis)
        mom_walls = _wall_extrapolation(d_mom[axis], axis)
        for rho_wall, tendency in zip(rho_walls, mom_walls):
            k1_residual = max(k1_residual, float(np.max(np.abs(tendency / rho_wall))))
    tendency_scale = max(1.0, float(np.max(np.abs(d_mom))))
    k1_tolerance = K1_FACTOR * min(grid.spacing) ** 2 * tendency_scale
    return CompatibilityReport(k0_passed=bool(k0_passed), k0_max=k0_max,
                               k1_passed=bool(k1_residual <= k1_tolerance), k1_residual=k1_residual,
                               k1_tolerance=k1_tolerance, k2='unchecked', accepted=bool(k0_passed))
