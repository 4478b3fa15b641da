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
Constitutive closures of a radiating monatomic gas.

    p = theta^(5/2) P(Z) + (a/3) theta^4
    e = (3/2) theta^(5/2) P(Z) / rho + a theta^4 / rho
    s = S(Z) + (4a/3) theta^3 / rho,          Z = rho / theta^(3/2)

All functions accept scalars or numpy arrays and broadcast.
"""

from collections import namedtuple

import numpy as np

from ..utility.exceptions import DomainError, ModelViolationError
from ..utility.utils import require, require_finite, relative_step

TINY = 1e-300


class GibbsResidual(namedtuple('GibbsResidual', 'thermal mechanical thermal_scale mechanical_scale')):
    """
    Residuals of theta ds = de + p d(1/rho):

        thermal    = theta s_theta - e_theta
        mechanical = theta s_rho - e_rho + p / rho^2

    The scales are the magnitudes of the terms each residual is made of.
    """

    def relative(self):
        return (np.abs(self.thermal) / np.maximum(self.thermal_scale, TINY),
                np.abs(self.mechanical) / np.maximum(self.mechanical_scale, TINY))


def check_state(rho, theta, rho_positive: bool = False):
    rho = np.asarray(rho, dtype=float)
    theta = np.asarray(theta, dtype=float)
    require_finite(rho, name='rho')
    require_finite(theta, name='theta')
    require(bool(np.all(theta > 0)), "theta should be greater than 0", DomainError)
    if rho_positive:
        require(bool(np.all(rho > 0)), "rho should be greater than 0", DomainError)
    else:
        require(bool(np.all(rho >= 0)), "rho should not be negative", DomainError)
    return rho, theta


def _molecular_pressure(gas, rho, theta):
    if gas.is_ideal:
        return rho * theta
    return theta ** 2.5 * gas.profile(rho / theta ** 1.5)


def _rho_internal_energy(gas, a, rho, theta):
    return 1.5 * _molecular_pressure(gas, rho, theta) + a * theta ** 4


def _rho_molecular_entropy(gas, rho, theta):
    positive = rho > 0
    safe = np.where(positive, rho, 1.0)
    if gas.is_ideal:
        profile = gas.s0 - np.log(safe) + 1.5 * np.log(theta)
    else:
        profile = gas.entropy_profile(safe / theta ** 1.5)
    return np.where(positive, rho * profile, 0.0)


def molecular_pressure(gas, rho, theta):
    rho, theta = check_state(rho, theta)
    return _molecular_pressure(gas, rho, theta)


def radiation_pressure(a: float, theta):
    theta = np.asarray(theta, dtype=float)
    return a / 3.0 * theta ** 4


def pressure(gas, a: float, rho, theta):
    """
    Full pressure p_M + p_R

    :param gas: GasModel
    :param a: radiation constant
    :param rho: density >= 0
    :param theta: temperature > 0
    :return: pressure
    """
    rho, theta = check_state(rho, theta)
    return _molecular_pressure(gas, rho, theta) + radiation_pressure(a, theta)


def rho_internal_energy(gas, a: float, rho, theta):
    """Density weighted internal energy rho e, defined down to rho = 0 where it equals a theta^4"""
    rho, theta = check_state(rho, theta)
    return _rho_internal_energy(gas, a, rho, theta)


def internal_energy(gas, a: float, rho, theta):
    rho, theta = check_state(rho, theta, rho_positive=True)
    if gas.is_ideal:
        return 1.5 * theta + a * theta ** 4 / rho
    return _rho_internal_energy(gas, a, rho, theta) / rho


def rho_entropy(gas, a: float, rho, theta):
    """Density weighted entropy rho s; rho S(Z) tends to 0 with rho, so rho = 0 is admitted"""
    rho, theta = check_state(rho, theta)
    return _rho_molecular_entropy(gas, rho, theta) + 4.0 * a / 3.0 * theta ** 3


def entropy(gas, a: float, rho, theta):
    rho, theta = check_state(rho, theta, rho_positive=True)
    if gas.is_ideal:
        molecular = gas.s0 - np.log(rho) + 1.5 * np.log(theta)
    else:
        molecular = gas.entropy_profile(rho / theta ** 1.5)
    return molecular + 4.0 * a / 3.0 * theta ** 3 / rho


def _central(function, x, other, along_first: bool):
    h = relative_step(x)
    if along_first:
        return (function(x + h, other) - function(x - h, other)) / (2.0 * h)
    return (function(other, x + h) - function(other, x - h)) / (2.0 * h)


def gibbs_residual(gas, a: float, rho, theta, energy=None, entropy_function=None, pressure_function=None):
    """
    Evaluates the Gibbs relation on the full closures with centered differences.

    :param gas: GasModel
    :param a: radiation constant
    :param rho: density > 0
    :param theta: temperature > 0
    :param energy: (Optional) e(rho, theta) replacing internal_energy
    :param entropy_function: (Optional) s(rho, theta) replacing entropy
    :param pressure_function: (Optional) p(rho, theta) replacing pressure
    :return: GibbsResidual
    """
    rho, theta = check_state(rho, theta, rho_positive=True)
    energy = energy or (lambda r, t: internal_energy(gas, a, r, t))
    entropy_function = entropy_function or (lambda r, t: entropy(gas, a, r, t))
    pressure_function = pressure_function or (lambda r, t: pressure(gas, a, r, t))

    s_theta = _central(entropy_function, theta, rho, along_first=False)
    e_theta = _central(energy, theta, rho, along_first=False)
    s_rho = _central(entropy_function, rho, theta, along_first=True)
    e_rho = _central(energy, rho, theta, along_first=True)
    p_term = pressure_function(rho, theta) / rho ** 2

    return GibbsResidual(thermal=theta * s_theta - e_theta,
                         mechanical=theta * s_rho - e_rho + p_term,
                         thermal_scale=np.abs(theta * s_theta) + np.abs(e_theta),
                         mechanical_scale=np.abs(theta * s_rho) + np.abs(e_rho) + np.abs(p_term))


def heat_capacity_cv(gas, rho, theta):
    """
    Molecular specific heat c_v = de_M/dtheta

    :return: c_v > 0
    :raise ModelViolationError: the closure gives a non-positive specific heat
    """
    rho, theta = check_state(rho, theta, rho_positive=True)
    if gas.is_ideal:
        return np.full(np.broadcast(rho, theta).shape, 1.5)
    cv = _central(lambda r, t: _rho_internal_energy(gas, 0.0, r, t) / r, theta, rho, along_first=False)
    if not np.all(cv > 0):
        index = np.unravel_index(int(np.argmin(cv)), np.shape(cv)) if np.ndim(cv) else ()
        raise ModelViolationError("heat capacity c_v should be greater than 0", cell=index,
                                  value=float(np.min(cv)))
    return cv


def total_heat_capacity(gas, a: float, rho, theta):
    """c_v of the full closure: c_v + 4 a theta^3 / rho"""
    cv = heat_capacity_cv(gas, rho, theta)
    return cv + 4.0 * a * np.asarray(theta, dtype=float) ** 3 / np.asarray(rho, dtype=float)


def pressure_derivatives(gas, a: float, rho, theta):
    """
    Partial derivatives (dp/drho, dp/dtheta) of the full pressure by centered differences
    """
    rho, theta = check_state(rho, theta, rho_positive=True)

    def full(r, t):
        return _molecular_pressure(gas, r, t) + radiation_pressure(a, t)

    return (_central(full, rho, theta, along_first=True),
            _central(full, theta, rho, along_first=False))


def sound_speed(gas, a: float, rho, theta):
    """
    Sound speed of the full closure

    Formula:
    c^2 = p_rho + theta p_theta^2 / (rho^2 c_v,total)
    """
    p_rho, p_theta = pressure_derivatives(gas, a, rho, theta)
    cv_total = total_heat_capacity(gas, a, rho, theta)
    rho, theta = np.asarray(rho, dtype=float), np.asarray(theta, dtype=float)
    squared = p_rho + theta * p_theta ** 2 / (rho ** 2 * cv_total)
    return np.sqrt(np.maximum(squared, 0.0))


def stress_tensor(transport, nu: float, theta, grad_u):
    """
    Newtonian viscous stress

    Formula:
    S = nu [mu(theta) (grad u + grad u^T - (2/3) div u I) + eta(theta) div u I]

    :param transport: TransportModel
    :param nu: viscosity scale
    :param theta: temperature, shape (...)
    :param grad_u: grad_u[i, j] = d u_i / d x_j, shape (d, d, ...)
    :return: S, shape (d, d, ...)
    """
    grad_u = np.asarray(grad_u, dtype=float)
    theta = np.asarray(theta, dtype=float)
    require(theta.size > 0 and bool(np.all(theta > 0)), "theta should be greater than 0", DomainError)
    dim = grad_u.shape[0]
    require(grad_u.ndim >= 2 and grad_u.shape[1] == dim, "grad_u should have shape (d, d, ...)")
    div = np.trace(grad_u, axis1=0, axis2=1)
    identity = np.eye(dim).reshape((dim, dim) + (1,) * (grad_u.ndim - 2))
    mu = transport.mu(theta)
    eta = transport.eta(theta)
    deviatoric = grad_u + np.swapaxes(grad_u, 0, 1) - 2.0 / 3.0 * div * identity
    return nu * (mu * deviatoric + eta * div * identity)


def heat_flux(transport, omega: float, theta, grad_theta):
    """
    Fourier heat flux q = -omega kappa(theta) grad theta

    :param grad_theta: shape (d, ...)
    :return: q, shape (d, ...)
    """
    theta = np.asarray(theta, dtype=float)
    require(theta.size > 0 and bool(np.all(theta > 0)), "theta should be greater than 0", DomainError)
    return -omega * transport.kappa(theta) * np.asarray(grad_theta, dtype=float)
