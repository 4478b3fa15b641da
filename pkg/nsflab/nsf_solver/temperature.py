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

import numpy as np

from ..thermo.closures import rho_internal_energy
from ..utility.exceptions import PositivityFailure, NumericalError
from ..utility.logger import Logger
from ..utility.utils import first_index, relative_step

TAG = 'Temperature'

TOLERANCE = 1e-12
MAX_ITERATIONS = 200


def _energy_residual(gas, a, rho, theta, target):
    return rho_internal_energy(gas, a, rho, theta) - target


def _energy_slope(gas, a, rho, theta):
    if gas.is_ideal:
        return 1.5 * rho + 4.0 * a * theta ** 3
    h = relative_step(theta)
    return (rho_internal_energy(gas, a, rho, theta + h) - rho_internal_energy(gas, a, rho, theta - h)) / (2.0 * h)


def recover_temperature(rho, mom, etot, gas, a: float):
    """
    Inverts rho e_M(rho, theta) + a theta^4 = etot - |mom|^2 / (2 rho) for theta.

    The left side increases strictly with theta, so a bracket is grown around
    the ideal-gas guess and refined by Newton steps that fall back to bisection
    whenever they leave the bracket.

    :param rho: density, shape (...)
    :param mom: momentum, shape (d, ...)
    :param etot: total energy, shape (...)
    :param gas: GasModel
    :param a: radiation constant
    :return: theta, shape (...)
    :raise PositivityFailure: rho or the internal energy is not positive; context holds the cell
    """
    rho = np.asarray(rho, dtype=float)
    etot = np.asarray(etot, dtype=float)
    mom = np.asarray(mom, dtype=float)
    bad_rho = ~(rho > 0)
    if bad_rho.any():
        raise PositivityFailure("density is not positive", cell=first_index(bad_rho))
    target = etot - 0.5 * np.sum(mom ** 2, axis=0) / rho
    bad_energy = ~(target > 0)
    if bad_energy.any():
        raise PositivityFailure("internal energy is not positive", cell=first_index(bad_energy))

    guess = 2.0 * target / (3.0 * rho)
    if gas.is_ideal and a == 0:
        return guess

    lo = guess.copy()
    hi = guess.copy()
    for _ in range(MAX_ITERATIONS):
        above = _energy_residual(gas, a, rho, lo, target) > 0
        if not above.any():
            break
        lo = np.where(above, 0.5 * lo, lo)
    else:
        cell = first_index(_energy_residual(gas, a, rho, lo, target) > 0)
        raise PositivityFailure("internal energy is below the cold energy of the gas", cell=cell)
    for _ in range(MAX_ITERATIONS):
        below = _energy_residual(gas, a, rho, hi, target) < 0
        if not below.any():
            break
        hi = np.where(below, 2.0 * hi, hi)
    else:
        cell = first_index(_energy_residual(gas, a, rho, hi, target) < 0)
        Logger.warning(f'no upper temperature bracket after {MAX_ITERATIONS} doublings at cell {cell}', TAG)
        shortfall = float(np.max(-_energy_residual(gas, a, rho, hi, target) / target))
        raise NumericalError("internal energy is above every bracketed temperature", tolerance=shortfall, cell=cell)

    theta = 0.5 * (lo + hi)
    for iteration in range(MAX_ITERATIONS):
        residual = _energy_residual(gas, a, rho, theta, target)
        lo = np.where(residual < 0, theta, lo)
        hi = np.where(residual > 0, theta, hi)
        with np.errstate(divide='ignore', invalid='ignore'):
            newton = theta - residual / _energy_slope(gas, a, rho, theta)
        inside = (newton > lo) & (newton < hi) & np.isfinite(newton)
        updated = np.where(inside, newton, 0.5 * (lo + hi))
        change = np.abs(updated - theta)
        theta = updated
        if np.all(change <= TOLERANCE * theta):
            return theta
    worst = float(np.max(np.abs(_energy_residual(gas, a, rho, theta, target)) / target))
    Logger.warning(f'temperature recovery stopped after {MAX_ITERATIONS} iterations, residual {worst}', TAG)
    raise NumericalError("temperature recovery did not converge", tolerance=worst)
