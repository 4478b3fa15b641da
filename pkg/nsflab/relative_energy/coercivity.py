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
Brute-force estimates of the distance property of the relative energy on a
compact set K = [rho_lo, rho_hi] x [theta_lo, theta_hi]:

    E(rho, theta, u | r, Theta, U) >= c(K) (|rho - r|^2 + |theta - Theta|^2 + |u - U|^2)

for (rho, theta) and (r, Theta) in K, and

    E >= c (1 + rho |u - U|^2 + rho e + rho |s|)

for (rho, theta) outside K.
"""

import math
from collections import namedtuple

import numpy as np
from scipy.stats import qmc

from ..thermo.closures import rho_entropy, rho_internal_energy
from ..utility.exceptions import ModelViolationError
from ..utility.logger import Logger
from ..utility.utils import require
from .relative_energy import ballistic_free_energy, relative_energy_density

TAG = 'Coercivity'

MIN_SAMPLES = 1000
# squared distance below which a sample counts as coincident with its reference
COINCIDENT = 1e-24
BOUNDARY_TOLERANCE = 1e-12


class ResidualBound(namedtuple('ResidualBound', 'c samples excluded witness')):
    """
    c: largest constant satisfying the residual-branch inequality over the sample
    witness: (rho, theta, u, r, Theta, U) attaining c
    """


def _check_rectangle(K) -> tuple:
    (rho_lo, rho_hi), (theta_lo, theta_hi) = K
    require(0 < rho_lo < rho_hi and 0 < theta_lo < theta_hi,
            "K should be a non-degenerate rectangle in the positive quadrant", K=K)
    return float(rho_lo), float(rho_hi), float(theta_lo), float(theta_hi)


def coercivity_constant(gas, a: float, K, sample_count: int = 10000, seed: int = 0,
                        velocity_radius: float = 1.0) -> float:
    """
    Minimum over a scrambled Sobol sample of K x K x [-R, R] of
    E / (|rho - r|^2 + |theta - Theta|^2 + |u - U|^2)

    :param gas: GasModel
    :param a: radiation constant
    :param K: ((rho_lo, rho_hi), (theta_lo, theta_hi))
    :param sample_count: number of samples, rounded up to a power of two
    :param seed: scrambling seed
    :param velocity_radius: bound R on |u - U|
    :return: c(K)
    :raise ModelViolationError: the sampled minimum is not positive
    """
    rho_lo, rho_hi, theta_lo, theta_hi = _check_rectangle(K)
    require(sample_count >= MIN_SAMPLES, f"sample_count should be at least {MIN_SAMPLES}")
    require(velocity_radius > 0, "velocity_radius should be greater than 0")

    sampler = qmc.Sobol(d=5, scramble=True, seed=seed)
    points = sampler.random_base2(m=math.ceil(math.log2(sample_count)))
    lower = [rho_lo, theta_lo, rho_lo, theta_lo, -velocity_radius]
    upper = [rho_hi, theta_hi, rho_hi, theta_hi, velocity_radius]
    rho, theta, r, Theta, du = qmc.scale(points, lower, upper).T

    distance = (rho - r) ** 2 + (theta - Theta) ** 2 + du ** 2
    kept = distance > COINCIDENT
    density = relative_energy_density(gas, a, rho[kept], theta[kept], du[kept], r[kept], Theta[kept], 0.0)
    ratios = density / distance[kept]
    index = int(np.argmin(ratios))
    c = float(ratios[index])
    Logger.debug(f'c(K) = {c:.6g} over {int(kept.sum())} samples, K = {K}', TAG)
    if not c > 0:
        raise ModelViolationError("relative energy is not coercive on K", c=c,
                                  witness=(float(rho[kept][index]), float(theta[kept][index]),
                                           float(r[kept][index]), float(Theta[kept][index])))
    return c


def free_energy_hessian(gas, a: float, r: float, Theta: float) -> np.ndarray:
    """Centered-difference Hessian of H_Theta in (rho, theta) at (r, Theta)"""
    h_rho = np.finfo(float).eps ** 0.25 * r
    h_theta = np.finfo(float).eps ** 0.25 * Theta

    def H(x, y):
        return float(ballistic_free_energy(gas, a, x, y, Theta))

    centre = H(r, Theta)
    h_rr = (H(r + h_rho, Theta) - 2.0 * centre + H(r - h_rho, Theta)) / h_rho ** 2
    h_tt = (H(r, Theta + h_theta) - 2.0 * centre + H(r, Theta - h_theta)) / h_theta ** 2
    h_rt = (H(r + h_rho, Theta + h_theta) - H(r + h_rho, Theta - h_theta)
            - H(r - h_rho, Theta + h_theta) + H(r - h_rho, Theta - h_theta)) / (4.0 * h_rho * h_theta)
    return np.array([[h_rr, h_rt], [h_rt, h_tt]])


def quadratic_form_minimum(gas, a: float, r: float, Theta: float) -> float:
    """
    Limit of the coercivity ratio as K shrinks to (r, Theta): the smallest
    eigenvalue of 1/2 diag(Hessian of H_Theta, r).
    """
    hessian = free_energy_hessian(gas, a, r, Theta)
    eigenvalues = np.linalg.eigvalsh(0.5 * hessian)
    return float(min(eigenvalues.min(), 0.5 * r))


def _inside(rho, theta, bounds) -> np.ndarray:
    rho_lo, rho_hi, theta_lo, theta_hi = bounds
    slack_rho = BOUNDARY_TOLERANCE * rho_hi
    slack_theta = BOUNDARY_TOLERANCE * theta_hi
    return ((rho >= rho_lo - slack_rho) & (rho <= rho_hi + slack_rho)
            & (theta >= theta_lo - slack_theta) & (theta <= theta_hi + slack_theta))


def residual_lower_bound_check(gas, a: float, K, states, references) -> ResidualBound:
    """
    Fits the largest c with E >= c (1 + rho |u - U|^2 + rho e + rho |s|) over
    pairs of states outside K and references inside K.

    :param states: (rho, theta, u) arrays of equal length
    :param references: (r, Theta, U) arrays broadcastable against the states
    :return: ResidualBound
    :raise ModelViolationError: the fitted constant is not positive
    """
    bounds = _check_rectangle(K)
    rho, theta, u = (np.atleast_1d(np.asarray(v, dtype=float)) for v in states)
    r, Theta, U = (np.asarray(v, dtype=float) for v in references)
    r, Theta, U = np.broadcast_to(r, rho.shape), np.broadcast_to(Theta, rho.shape), np.broadcast_to(U, rho.shape)
    require(bool(np.all(_inside(r, Theta, bounds))), "references should lie inside K")

    kept = ~_inside(rho, theta, bounds)
    excluded = int(rho.size - kept.sum())
    require(bool(kept.any()), "no state lies outside K")
    rho, theta, u, r, Theta, U = rho[kept], theta[kept], u[kept], r[kept], Theta[kept], U[kept]

    density = relative_energy_density(gas, a, rho, theta, u, r, Theta, U)
    weight = (1.0 + rho * (u - U) ** 2 + rho_internal_energy(gas, a, rho, theta)
              + np.abs(rho_entropy(gas, a, rho, theta)))
    ratios = density / weight
    index = int(np.argmin(ratios))
    c = float(ratios[index])
    witness = tuple(float(v[index]) for v in (rho, theta, u, r, Theta, U))
    if not c > 0:
        raise ModelViolationError("relative energy does not dominate the residual weight", c=c, witness=witness)
    Logger.debug(f'residual branch c = {c:.6g}, {excluded} boundary or inner states excluded', TAG)
    return ResidualBound(c, int(kept.sum()), excluded, witness)
