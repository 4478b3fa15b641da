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

from ..grid_fields.norms import integral
from ..nsf_solver.temperature import recover_temperature
from ..utility.exceptions import HypothesisViolationError
from ..utility.logger import Logger
from ..utility.utils import require
from .relative_energy import relative_energy_density

TAG = 'EssentialResidual'

DEFAULT_MARGIN = 0.25


def smoothstep(t):
    """Quintic ramp 6t^5 - 15t^4 + 10t^3 clipped to [0, 1]"""
    t = np.clip(np.asarray(t, dtype=float), 0.0, 1.0)
    return t ** 3 * (10.0 - 15.0 * t + 6.0 * t ** 2)


@dataclass(frozen=True)
class EssentialResidualWindow:
    """
    Cutoff Phi(rho, theta) equal to 1 on [rho_lo, rho_hi] x [theta_lo, theta_hi]
    and 0 outside [lo / (1 + margin), hi (1 + margin)] in both variables.
    """
    rho_lo: float
    rho_hi: float
    theta_lo: float
    theta_hi: float
    margin: float = DEFAULT_MARGIN

    def __post_init__(self):
        require(0 < self.rho_lo < self.rho_hi, "window should satisfy 0 < rho_lo < rho_hi")
        require(0 < self.theta_lo < self.theta_hi, "window should satisfy 0 < theta_lo < theta_hi")
        require(self.margin > 0, "margin should be greater than 0")

    def widened(self) -> tuple:
        grow = 1.0 + self.margin
        return self.rho_lo / grow, self.rho_hi * grow, self.theta_lo / grow, self.theta_hi * grow

    def _ramp(self, x, lo: float, hi: float):
        x = np.asarray(x, dtype=float)
        grow = 1.0 + self.margin
        outer_lo, outer_hi = lo / grow, hi * grow
        rising = smoothstep((x - outer_lo) / (lo - outer_lo))
        falling = smoothstep((outer_hi - x) / (outer_hi - hi))
        return np.where(x < lo, rising, np.where(x > hi, falling, 1.0))

    def cutoff(self, rho, theta):
        return self._ramp(rho, self.rho_lo, self.rho_hi) * self._ramp(theta, self.theta_lo, self.theta_hi)

    def contains(self, rho, theta) -> bool:
        """Strictly inside the inner rectangle"""
        rho, theta = np.asarray(rho), np.asarray(theta)
        return bool(np.all((rho > self.rho_lo) & (rho < self.rho_hi)
                           & (theta > self.theta_lo) & (theta < self.theta_hi)))


def essential_residual_split(values, window: EssentialResidualWindow, rho, theta) -> tuple:
    """
    [F]_ess = Phi(rho, theta) F and [F]_res = F - [F]_ess

    :param values: F, scalar field or vector field with the components first
    :param rho, theta: point values the cutoff is evaluated at
    """
    values = np.asarray(values, dtype=float)
    essential = window.cutoff(rho, theta) * values
    return essential, values - essential


class QuadraticBounds(namedtuple('QuadraticBounds',
                                 'relative_energy essential_lhs residual_lhs c_essential c_residual')):
    """Fitted constants of the essential and residual quadratic bounds"""

    @property
    def c(self) -> float:
        return max(self.c_essential, self.c_residual)


def _fitted(lhs: float, energy: float, what: str) -> float:
    if lhs == 0.0:
        return 0.0
    if not energy > 0.0:
        raise HypothesisViolationError(f"{what} bound is unbounded: positive left side with zero relative energy",
                                       lhs=lhs, relative_energy=energy)
    return lhs / energy


def quadratic_bounds_check(state, reference, window: EssentialResidualWindow, gas, a: float,
                           theta=None) -> QuadraticBounds:
    """
    Fits C in

        ||[rho - rho_E]_ess||^2 + ||[theta - theta_E]_ess||^2 + ||[u - u_E]_ess||^2 <= C E
        int rho |u - u_E|^2 + int [1 + rho^(5/3) + rho theta + a theta^4]_res <= C E

    with the split taken at the fluid state (rho, theta), not at the reference
    (rho_E, theta_E). The reference is required strictly inside the window,
    where Phi = 1, so only the fluid state can send a cell (a vacuum pocket,
    say) to the residual part.

    :param state: FluidState
    :param reference: ReferenceFields strictly inside the window
    :param theta: (Optional) temperature of state, recovered when omitted
    :return: QuadraticBounds
    :raise HypothesisViolationError: a left side is positive while E vanishes
    """
    grid = state.grid
    reference.grid.require_same(grid, 'state and reference')
    require(window.contains(reference.rho_E, reference.theta_E), "reference should lie strictly inside the window")
    if theta is None:
        theta = recover_temperature(state.rho, state.mom, state.etot, gas, a)
    rho, u = state.rho, state.velocity()

    energy = integral(relative_energy_density(gas, a, rho, theta, u, reference.rho_E, reference.theta_E,
                                              reference.u_E), grid)

    essential_lhs = 0.0
    for difference in (rho - reference.rho_E, theta - reference.theta_E):
        part, _ = essential_residual_split(difference, window, rho, theta)
        essential_lhs += integral(part ** 2, grid)
    part, _ = essential_residual_split(u - reference.u_E, window, rho, theta)
    essential_lhs += integral(np.sum(part ** 2, axis=0), grid)

    _, far = essential_residual_split(1.0 + rho ** (5.0 / 3.0) + rho * theta + a * theta ** 4, window, rho, theta)
    residual_lhs = integral(rho * np.sum((u - reference.u_E) ** 2, axis=0), grid) + integral(far, grid)

    report = QuadraticBounds(energy, essential_lhs, residual_lhs,
                             _fitted(essential_lhs, energy, 'essential'),
                             _fitted(residual_lhs, energy, 'residual'))
    Logger.debug(f'quadratic bounds: E = {energy:.6g}, C = {report.c:.6g}', TAG)
    return report
