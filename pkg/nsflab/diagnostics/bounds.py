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
Uniform energy bounds, the interpolation estimate and the convergence measure,
evaluated on stored NSF trajectories.
"""

from collections import namedtuple

import numpy as np

from ..grid_fields.boundary import fill_ghosts
from ..grid_fields.calculus import gradient
from ..grid_fields.norms import integral, lp_norm, trapezoid_cumulative
from ..utility.logger import Logger
from ..utility.utils import require

TAG = 'Bounds'

INTERPOLATION_SLACK = 1e-12

UNIFORM_BOUND_KEYS = ('kinetic', 'density_5_3', 'thermal', 'radiation', 'viscous_dissipation',
                      'damping', 'heat_dissipation', 'scaled_l4_velocity')

UniformBounds = namedtuple('UniformBounds', UNIFORM_BOUND_KEYS)
InterpolationCheck = namedtuple('InterpolationCheck', 'ratio passed')


def _deviatoric_square(grad_u: np.ndarray) -> np.ndarray:
    dim = grad_u.shape[0]
    div = np.trace(grad_u, axis1=0, axis2=1)
    identity = np.eye(dim).reshape((dim, dim) + (1,) * (grad_u.ndim - 2))
    deviatoric = grad_u + np.swapaxes(grad_u, 0, 1) - 2.0 / 3.0 * div * identity
    return np.sum(deviatoric ** 2, axis=(0, 1))


def uniform_bounds(trajectory, scaling=None) -> UniformBounds:
    """
    sup over output instants of int rho |u|^2, int rho^(5/3), int rho theta, a int theta^4,
    and the trapezoid time integrals of the dissipation terms

        nu int int |grad u + grad u^T - 2/3 div u I|^2,  lambda int int |u|^2,
        omega int int |grad theta|^2 + |log theta|^2,

    together with || nu^(3/8) lambda^(1/8) u ||_{L^2(0, T; L^4)}.

    :param trajectory: Trajectory with stored snapshots
    :param scaling: (Optional) ScalingParams, the run's own by default
    :return: UniformBounds
    """
    require(len(trajectory.states) > 0, "trajectory has no snapshots")
    scaling = trajectory.config.scaling if scaling is None else scaling
    grid = trajectory.grid
    a = scaling.a
    sup = {'kinetic': 0.0, 'density_5_3': 0.0, 'thermal': 0.0, 'radiation': 0.0}
    viscous, damping, heat, l4 = [], [], [], []
    for state, theta in zip(trajectory.states, trajectory.thetas):
        rho, u = state.rho, state.velocity()
        speed_squared = np.sum(u ** 2, axis=0)
        sup['kinetic'] = max(sup['kinetic'], integral(rho * speed_squared, grid))
        sup['density_5_3'] = max(sup['density_5_3'], integral(rho ** (5.0 / 3.0), grid))
        sup['thermal'] = max(sup['thermal'], integral(rho * theta, grid))
        sup['radiation'] = max(sup['radiation'], a * integral(theta ** 4, grid))

        grad_u = gradient(fill_ghosts(u, grid, vector=True))
        grad_theta = gradient(fill_ghosts(theta, grid))
        viscous.append(scaling.nu * integral(_deviatoric_square(grad_u), grid))
        damping.append(scaling.lam * integral(speed_squared, grid))
        heat.append(scaling.omega * integral(np.sum(grad_theta ** 2, axis=0) + np.log(theta) ** 2, grid))
        l4.append(lp_norm(scaling.nu ** 0.375 * scaling.lam ** 0.125 * u, grid, 4) ** 2)

    times = trajectory.times
    bounds = UniformBounds(sup['kinetic'], sup['density_5_3'], sup['thermal'], sup['radiation'],
                           float(trapezoid_cumulative(times, viscous)[-1]),
                           float(trapezoid_cumulative(times, damping)[-1]),
                           float(trapezoid_cumulative(times, heat)[-1]),
                           float(np.sqrt(trapezoid_cumulative(times, l4)[-1])))
    Logger.debug(f'uniform bounds: {dict(bounds._asdict())}', TAG)
    return bounds


def interpolation_check(velocities, grid) -> InterpolationCheck:
    """
    Worst ratio ||u||_4 / (||u||_6^(3/4) ||u||_2^(1/4)) over the snapshots; a zero field counts as 0.

    :param velocities: iterable of velocity fields on `grid`
    :return: InterpolationCheck; passed is False when a ratio exceeds 1 + 1e-12
    """
    worst = 0.0
    for u in velocities:
        l2 = lp_norm(u, grid, 2)
        if l2 == 0.0:
            continue
        ratio = lp_norm(u, grid, 4) / (lp_norm(u, grid, 6) ** 0.75 * l2 ** 0.25)
        worst = max(worst, ratio)
    passed = worst <= 1.0 + INTERPOLATION_SLACK
    if not passed:
        Logger.warning(f'interpolation ratio {worst!r} exceeds 1, norm implementation is inconsistent', TAG)
    return InterpolationCheck(worst, passed)


def convergence_measure(trajectory, references) -> float:
    """
    sup over output instants of int rho |u - u_E|^2 + |rho - rho_E|^(5/3) + rho |theta - theta_E|

    :param references: ReferenceFields, one per stored NSF snapshot
    """
    references = list(references)
    require(len(references) == len(trajectory.states), "one reference per snapshot is required")
    grid = trajectory.grid
    measure = 0.0
    for state, theta, reference in zip(trajectory.states, trajectory.thetas, references):
        reference.grid.require_same(grid, 'state and reference')
        rho = state.rho
        density = (rho * np.sum((state.velocity() - reference.u_E) ** 2, axis=0)
                   + np.abs(rho - reference.rho_E) ** (5.0 / 3.0) + rho * np.abs(theta - reference.theta_E))
        measure = max(measure, integral(density, grid))
    return measure
