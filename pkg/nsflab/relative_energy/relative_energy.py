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
Relative energy of a fluid state (rho, theta, u) with respect to a smooth
trio (r, Theta, U):

    E = 1/2 rho |u - U|^2 + H_Theta(rho, theta) - dH_Theta/drho(r, Theta) (rho - r) - H_Theta(r, Theta)

with the ballistic free energy H_Theta(rho, theta) = rho (e - Theta s).
"""

from dataclasses import dataclass

import numpy as np

from ..grid_fields.norms import integral
from ..nsf_solver.temperature import recover_temperature
from ..thermo.closures import check_state, rho_entropy, rho_internal_energy
from ..utility.utils import require, relative_step


def ballistic_free_energy(gas, a: float, rho, theta, Theta):
    """
    H_Theta(rho, theta) = rho e(rho, theta) - Theta rho s(rho, theta), defined down to rho = 0
    """
    Theta = np.asarray(Theta, dtype=float)
    check_state(0.0, Theta)
    return rho_internal_energy(gas, a, rho, theta) - Theta * rho_entropy(gas, a, rho, theta)


def free_energy_density_slope(gas, a: float, r, Theta):
    """
    dH_Theta/drho at (r, Theta); for the ideal gas e - Theta s + p / r holds in closed form
    """
    r, Theta = check_state(r, Theta, rho_positive=True)
    if gas.is_ideal:
        molecular_entropy = gas.s0 - np.log(r) + 1.5 * np.log(Theta)
        return 1.5 * Theta - Theta * molecular_entropy + Theta
    h = relative_step(r)
    return (ballistic_free_energy(gas, a, r + h, Theta, Theta)
            - ballistic_free_energy(gas, a, r - h, Theta, Theta)) / (2.0 * h)


def _kinetic(rho, u, U):
    rho = np.asarray(rho, dtype=float)
    difference = np.asarray(u, dtype=float) - np.asarray(U, dtype=float)
    if difference.ndim > rho.ndim:
        return 0.5 * rho * np.sum(difference ** 2, axis=0)
    return 0.5 * rho * difference ** 2


def relative_energy_density(gas, a: float, rho, theta, u, r, Theta, U):
    """
    Pointwise relative energy; u and U are scalars or arrays with the components on the first axis
    """
    return (_kinetic(rho, u, U)
            + ballistic_free_energy(gas, a, rho, theta, Theta)
            - free_energy_density_slope(gas, a, r, Theta) * (np.asarray(rho, dtype=float) - r)
            - ballistic_free_energy(gas, a, r, Theta, Theta))


def relative_energy(state, reference, gas, a: float, theta=None) -> float:
    """
    Midpoint quadrature of the relative energy density over the cells

    :param state: FluidState
    :param reference: ReferenceFields on the same grid
    :param gas: GasModel
    :param a: radiation constant
    :param theta: (Optional) temperature of state, recovered when omitted
    :return: E(state | reference)
    :raise UsageError: state and reference live on different grids
    """
    reference.grid.require_same(state.grid, 'state and reference')
    if theta is None:
        theta = recover_temperature(state.rho, state.mom, state.etot, gas, a)
    density = relative_energy_density(gas, a, state.rho, theta, state.velocity(),
                                      reference.rho_E, reference.theta_E, reference.u_E)
    return integral(density, state.grid)


@dataclass(frozen=True)
class RelativeEnergyReport:
    """
    E(tau) at the output instants, its supremum and the rate envelope of the run's scaling parameters
    """
    times: tuple
    values: tuple
    sup_value: float
    envelope: float
    initial: float

    @classmethod
    def from_series(cls, times, values, envelope: float) -> 'RelativeEnergyReport':
        values = tuple(float(v) for v in values)
        require(len(values) > 0 and len(values) == len(times), "one value per instant is required")
        return cls(tuple(float(t) for t in times), values, max(values), float(envelope), values[0])

    def rows(self) -> list:
        return [[t, value, self.envelope] for t, value in zip(self.times, self.values)]
