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
Residuals of the entropy and thermal-energy forms of the Euler system
evaluated on a computed trajectory:

    R_s     = d_t(rho s_M) + div(rho s_M u)
    R_theta = c_v (d_t(rho theta) + div(rho theta u)) + theta dp_M/dtheta div u

Time derivatives use fourth order centered differences over the uniformly
spaced snapshots, space derivatives fourth order centered stencils.
"""

from collections import namedtuple

import numpy as np

from ..grid_fields.boundary import fill_ghosts
from ..grid_fields.calculus import divergence_fourth_order
from ..grid_fields.norms import integral, lp_norm
from ..thermo.closures import heat_capacity_cv, pressure_derivatives, rho_entropy
from ..utility.utils import require

SPACING_TOLERANCE = 1e-9

FormulationResiduals = namedtuple('FormulationResiduals', 'times entropy thermal entropy_integral')


def _time_derivative(series: list, index: int, dt: float) -> np.ndarray:
    return (-series[index + 2] + 8.0 * series[index + 1] - 8.0 * series[index - 1] + series[index - 2]) / (12.0 * dt)


def formulation_residuals(trajectory, gas, indices=None) -> FormulationResiduals:
    """
    :param trajectory: EulerTrajectory with at least five uniformly spaced snapshots
    :param gas: GasModel
    :param indices: (Optional) snapshot indices to evaluate, two away from both ends
    :return: FormulationResiduals with L2 norms of both residuals and the signed integral of R_s per instant
    """
    times = trajectory.times
    require(len(times) >= 5, "at least five snapshots are required")
    steps = np.diff(times)
    dt = float(np.mean(steps))
    require(bool(np.all(np.abs(steps - dt) <= SPACING_TOLERANCE * max(dt, 1.0))),
            "snapshots should be uniformly spaced")
    grid = trajectory.grid
    primitives = [trajectory.primitive(i) for i in range(len(times))]
    rho_s = [rho_entropy(gas, 0.0, p.rho, p.theta) for p in primitives]
    rho_theta = [p.rho * p.theta for p in primitives]
    if indices is None:
        indices = range(2, len(times) - 2)

    entropy, thermal, entropy_integral, instants = [], [], [], []
    with np.errstate(all='ignore'):
        for i in indices:
            require(2 <= i <= len(times) - 3, "residuals need two snapshots on both sides")
            p = primitives[i]
            u = fill_ghosts(p.u, grid, vector=True)
            div_u = divergence_fourth_order(u)
            entropy_flux = fill_ghosts(rho_s[i] * p.u, grid, vector=True)
            thermal_flux = fill_ghosts(rho_theta[i] * p.u, grid, vector=True)
            r_s = _time_derivative(rho_s, i, dt) + divergence_fourth_order(entropy_flux)
            _, p_theta = pressure_derivatives(gas, 0.0, p.rho, p.theta)
            r_theta = (heat_capacity_cv(gas, p.rho, p.theta)
                       * (_time_derivative(rho_theta, i, dt) + divergence_fourth_order(thermal_flux))
                       + p.theta * p_theta * div_u)
            instants.append(float(times[i]))
            entropy.append(lp_norm(r_s, grid, 2))
            thermal.append(lp_norm(r_theta, grid, 2))
            entropy_integral.append(integral(r_s, grid))
    return FormulationResiduals(np.array(instants), np.array(entropy), np.array(thermal), np.array(entropy_integral))
