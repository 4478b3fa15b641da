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
Term-by-term evaluation of the relative energy inequality

    [E(rho, theta, u | r, Theta, U)]_0^tau
        + int_0^tau int Theta/theta (S : grad u - q . grad theta / theta) + lambda int_0^tau int |u|^2
    <= sum of the integrals I1 .. I9 over (0, tau)

along an NSF trajectory, with the test trio (r, Theta, U) taken from the
Euler reference. Integrands:

    I1  rho (U - u) . grad U (u - U)
    I2  S : grad U
    I3  -(q / theta) . grad Theta
    I4  lambda u . U
    I5  rho (s - s(r, Theta)) (U - u) . grad Theta
    I6  rho (d_t U + U . grad U) . (U - u)
    I7  -p div U
    I8  -rho (s - s(r, Theta)) (d_t Theta + U . grad Theta)
    I9  (1 - rho / r) d_t p(r, Theta) - (rho / r) u . grad p(r, Theta)
"""

import numpy as np

from ..euler_reference.sampling import sample_reference
from ..grid_fields.boundary import fill_ghosts
from ..grid_fields.calculus import divergence, gradient
from ..grid_fields.norms import integral, trapezoid_cumulative
from ..relative_energy.relative_energy import relative_energy
from ..relative_energy.window import quadratic_bounds_check
from ..thermo.closures import entropy, heat_flux, pressure, stress_tensor
from ..utility.exceptions import UsageError
from ..utility.logger import Logger
from ..utility.utils import require

TAG = 'RelativeEnergyInequality'

TERMS = ('I1', 'I2', 'I3', 'I4', 'I5', 'I6', 'I7', 'I8', 'I9')
MUTATIONS = (None, 'dissipation_sign')
# terms whose sign the dissipation mutation flips
DISSIPATION_TERMS = ('I2', 'I3')


class InequalityResidual:
    """
    Cumulative integrals of every term at the output instants and the
    residual LHS - RHS, which must not exceed the discretization level.
    """

    def __init__(self, times, energy, dissipation, damping, terms: dict, quadratic=None):
        self.times = np.asarray(times, dtype=float)
        self.energy = np.asarray(energy, dtype=float)
        self.dissipation = np.asarray(dissipation, dtype=float)
        self.damping = np.asarray(damping, dtype=float)
        self.terms = {name: np.asarray(values, dtype=float) for name, values in terms.items()}
        self.quadratic = quadratic

    @property
    def lhs(self) -> np.ndarray:
        return self.energy - self.energy[0] + self.dissipation + self.damping

    @property
    def rhs(self) -> np.ndarray:
        return sum(self.terms[name] for name in TERMS)

    @property
    def residual(self) -> np.ndarray:
        return self.lhs - self.rhs

    @property
    def max_excess(self) -> float:
        """Largest positive part of LHS - RHS"""
        return float(max(0.0, np.max(self.residual)))

    def header(self) -> list:
        columns = ['t', 'E', 'dissipation', 'damping'] + list(TERMS) + ['lhs', 'rhs', 'residual']
        if self.quadratic is not None:
            columns.append('c_quadratic')
        return columns

    def rows(self) -> list:
        lhs, rhs, residual = self.lhs, self.rhs, self.residual
        rows = []
        for k, t in enumerate(self.times):
            row = [t, self.energy[k], self.dissipation[k], self.damping[k]]
            row.extend(self.terms[name][k] for name in TERMS)
            row.extend([lhs[k], rhs[k], residual[k]])
            if self.quadratic is not None:
                row.append(self.quadratic[k])
            rows.append([float(value) for value in row])
        return rows


def _reference_rates(reference, t: float, grid, gas, a: float) -> tuple:
    """Centered time differences of U, Theta and p(r, Theta) over one snapshot spacing"""
    times = reference.times
    require(len(times) >= 2, "reference trajectory needs at least two snapshots")
    delta = float(times[1] - times[0])
    before = max(float(times[0]), t - delta)
    after = min(float(times[-1]), t + delta)
    first = sample_reference(reference, before, grid)
    second = sample_reference(reference, after, grid)
    span = after - before
    dU = (second.u_E - first.u_E) / span
    dTheta = (second.theta_E - first.theta_E) / span
    dp = (pressure(gas, a, second.rho_E, second.theta_E) - pressure(gas, a, first.rho_E, first.theta_E)) / span
    return dU, dTheta, dp


def _integrands(state, theta, trio, rates, config) -> tuple:
    gas, transport, scaling, grid = config.gas, config.transport, config.scaling, config.grid
    a = config.a
    rho, u = state.rho, state.velocity()
    r, Theta, U = trio.rho_E, trio.theta_E, trio.u_E
    dU, dTheta, dp = rates

    grad_u = gradient(fill_ghosts(u, grid, vector=True))
    grad_theta = gradient(fill_ghosts(theta, grid))
    grad_U = gradient(fill_ghosts(U, grid, vector=True))
    grad_Theta = gradient(fill_ghosts(Theta, grid))
    div_U = divergence(fill_ghosts(U, grid, vector=True))
    p_reference = pressure(gas, a, r, Theta)
    grad_p = gradient(fill_ghosts(p_reference, grid))

    stress = stress_tensor(transport, scaling.nu, theta, grad_u)
    q = heat_flux(transport, scaling.omega, theta, grad_theta)
    entropy_gap = rho * (entropy(gas, a, rho, theta) - entropy(gas, a, r, Theta))
    lag = U - u
    # (U . grad) U with grad_U[i, j] = d_j U_i
    advection = np.einsum('ij...,j...->i...', grad_U, U)

    dissipation = Theta / theta * (np.sum(stress * grad_u, axis=(0, 1)) - np.sum(q * grad_theta, axis=0) / theta)
    damping = scaling.lam * np.sum(u ** 2, axis=0)
    terms = {
        'I1': -rho * np.einsum('i...,ij...,j...->...', lag, grad_U, lag),
        'I2': np.sum(stress * grad_U, axis=(0, 1)),
        'I3': -np.sum(q * grad_Theta, axis=0) / theta,
        'I4': scaling.lam * np.sum(u * U, axis=0),
        'I5': entropy_gap * np.sum(lag * grad_Theta, axis=0),
        'I6': rho * np.sum((dU + advection) * lag, axis=0),
        'I7': -pressure(gas, a, rho, theta) * div_U,
        'I8': -entropy_gap * (dTheta + np.sum(U * grad_Theta, axis=0)),
        'I9': (1.0 - rho / r) * dp - rho / r * np.sum(u * grad_p, axis=0),
    }
    return dissipation, damping, terms


def rel_energy_inequality_residual(trajectory, reference, window=None, mutation: str = None) -> InequalityResidual:
    """
    Evaluates both sides of the relative energy inequality at every output instant.

    The gas, transport law and scaling parameters are those of the NSF run.
    Time integrals use the trapezoid rule over the output instants.

    :param trajectory: NSF Trajectory
    :param reference: EulerTrajectory covering the NSF output instants, on a refinement of the NSF grid
    :param window: (Optional) EssentialResidualWindow; adds the fitted quadratic-bound constant per instant
    :param mutation: None or 'dissipation_sign' (flips I2 and I3)
    :return: InequalityResidual
    :raise UsageError: an output instant lies outside the reference range
    """
    require(mutation in MUTATIONS, f"mutation should be one of {MUTATIONS}")
    require(len(trajectory.states) >= 2, "trajectory needs at least two output instants")
    config = trajectory.config
    grid, gas, a = config.grid, config.gas, config.a
    times = trajectory.times

    energies, dissipation, damping, quadratic = [], [], [], []
    integrands = {name: [] for name in TERMS}
    for state, theta in zip(trajectory.states, trajectory.thetas):
        try:
            trio = sample_reference(reference, state.time, grid)
        except UsageError:
            Logger.error(f'no reference available at t = {state.time}', TAG)
            raise
        rates = _reference_rates(reference, state.time, grid, gas, a)
        energies.append(relative_energy(state, trio, gas, a, theta))
        local_dissipation, local_damping, local_terms = _integrands(state, theta, trio, rates, config)
        dissipation.append(integral(local_dissipation, grid))
        damping.append(integral(local_damping, grid))
        for name in TERMS:
            value = integral(local_terms[name], grid)
            if mutation == 'dissipation_sign' and name in DISSIPATION_TERMS:
                value = -value
            integrands[name].append(value)
        if window is not None:
            quadratic.append(quadratic_bounds_check(state, trio, window, gas, a, theta).c)

    result = InequalityResidual(times, energies, trapezoid_cumulative(times, dissipation),
                                trapezoid_cumulative(times, damping),
                                {name: trapezoid_cumulative(times, values) for name, values in integrands.items()},
                                quadratic if window is not None else None)
    Logger.info(f'relative energy inequality: max excess {result.max_excess:.3e}, '
                f'E(t_end) = {result.energy[-1]:.3e}', TAG)
    return result
