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
Smooth Euler reference solver.

Fourth order centered fluxes in flux form

    G_{k} = (-F_{k+1} + 7 F_{k} + 7 F_{k-1} - F_{k-2}) / 12      (face k between cells k - 1 and k)

plus a sixth order dissipative filter, also in flux form so that mass and
energy stay conservative:

    dU/dt += eps_f alpha / (64 h) delta^6 U

SSP-RK3 with a fixed time step, so stored snapshots are uniformly spaced.
"""


import numpy as np

from ..grid_fields.boundary import GhostedField, fill_ghosts
from ..grid_fields.calculus import window, flux_divergence
from ..grid_fields.fields import FluidState, PrimitiveState
from ..grid_fields.grid import Grid
from ..grid_fields.norms import integral, inner_product
from ..interfaces.abc_solver import ABCSolver
from ..nsf_solver.temperature import recover_temperature
from ..thermo.closures import pressure, rho_internal_energy, sound_speed
from ..utility.exceptions import LabException
from ..utility.logger import Logger
from ..utility.utils import require

TAG = 'EulerSolver'

CALIBRATION_STEPS = 10
FILTER_BUDGET = 1e-6


class EulerSolver(ABCSolver):

    def __init__(self, gas, grid: Grid, filter_amplitude: float = 0.0, cfl: float = 0.4, dt: float = None):
        require(filter_amplitude >= 0, "filter amplitude should not be negative")
        self.gas = gas
        self.grid = grid
        self.filter_amplitude = float(filter_amplitude)
        self.cfl = cfl
        self.dt = dt

    def primitive(self, state: FluidState) -> PrimitiveState:
        theta = recover_temperature(state.rho, state.mom, state.etot, self.gas, 0.0)
        return PrimitiveState(state.grid, state.rho, state.velocity(), theta, state.time)

    def _ghosted(self, state: FluidState) -> tuple:
        primitive = self.primitive(state)
        rho = fill_ghosts(primitive.rho, self.grid)
        u = fill_ghosts(primitive.u, self.grid, vector=True)
        theta = fill_ghosts(primitive.theta, self.grid)
        return primitive, rho, u, theta

    def _conserved(self, rho: GhostedField, u: GhostedField, theta: GhostedField) -> list:
        """Ghosted conservative fields (rho, mom, etot) built from ghosted primitives"""
        energy = (0.5 * rho.data * np.sum(u.data ** 2, axis=0)
                  + rho_internal_energy(self.gas, 0.0, rho.data, theta.data))
        return [rho, GhostedField(rho.data * u.data, self.grid, vector=True),
                GhostedField(energy, self.grid, vector=False)]

    def _fluxes(self, rho: GhostedField, u: GhostedField, theta: GhostedField, axis: int) -> list:
        p = pressure(self.gas, 0.0, rho.data, theta.data)
        conserved = self._conserved(rho, u, theta)
        normal = u.data[axis]
        mom_flux = rho.data * u.data * normal
        mom_flux[axis] += p
        return [GhostedField(rho.data * normal, self.grid, False),
                GhostedField(mom_flux, self.grid, True),
                GhostedField((conserved[2].data + p) * normal, self.grid, False)]

    @staticmethod
    def _central_face(flux: GhostedField, axis: int) -> np.ndarray:
        def cells(offset):
            return window(flux, {axis: offset}, {axis: 1})
        return (-cells(1) + 7.0 * cells(0) + 7.0 * cells(-1) - cells(-2)) / 12.0

    @staticmethod
    def _fifth_difference(field: GhostedField, axis: int) -> np.ndarray:
        def cells(offset):
            return window(field, {axis: offset}, {axis: 1})
        return (cells(2) - cells(-3)) - 5.0 * (cells(1) - cells(-2)) + 10.0 * (cells(0) - cells(-1))

    def max_signal_speed(self, primitive: PrimitiveState) -> float:
        c = sound_speed(self.gas, 0.0, primitive.rho, primitive.theta)
        return float(np.max(np.sqrt(np.sum(primitive.u ** 2, axis=0)) + c))

    def _tendencies(self, state: FluidState, central: bool, filtered: float) -> list:
        primitive, rho, u, theta = self._ghosted(state)
        alpha = self.max_signal_speed(primitive) if filtered else 0.0
        conserved = self._conserved(rho, u, theta) if filtered else None
        tendencies = [np.zeros(self.grid.shape), np.zeros((self.grid.dim,) + self.grid.shape),
                      np.zeros(self.grid.shape)]
        for axis in range(self.grid.dim):
            fluxes = self._fluxes(rho, u, theta, axis) if central else None
            for k in range(3):
                face = 0.0
                if central:
                    face = self._central_face(fluxes[k], axis)
                if filtered:
                    face = face - filtered * alpha / 64.0 * self._fifth_difference(conserved[k], axis)
                tendencies[k] = tendencies[k] - flux_divergence(face, self.grid, axis, leading=1 if k == 1 else 0)
        return tendencies

    def rhs(self, state: FluidState, t: float = None):
        """:return: (d rho/dt, d mom/dt, d etot/dt) including the filter"""
        return tuple(self._tendencies(state, True, self.filter_amplitude))

    def filter_tendency(self, state: FluidState) -> tuple:
        """Filter contribution at unit amplitude"""
        return tuple(self._tendencies(state, False, 1.0))

    def stable_dt(self, state: FluidState) -> float:
        if self.dt is not None:
            return self.dt
        primitive = self.primitive(state)
        return self.cfl * min(self.grid.spacing) / self.max_signal_speed(primitive)

    def step(self, state: FluidState, dt: float) -> FluidState:
        t = state.time

        def stage(current):
            d_rho, d_mom, d_etot = self.rhs(current)
            return current.rho + dt * d_rho, current.mom + dt * d_mom, current.etot + dt * d_etot

        rho1, mom1, etot1 = stage(state)
        first = state.with_fields(rho1, mom1, etot1, t + dt)
        rho2, mom2, etot2 = stage(first)
        second = state.with_fields(0.75 * state.rho + 0.25 * rho2, 0.75 * state.mom + 0.25 * mom2,
                                   0.75 * state.etot + 0.25 * etot2, t + 0.5 * dt)
        rho3, mom3, etot3 = stage(second)
        return state.with_fields(state.rho / 3.0 + 2.0 / 3.0 * rho3, state.mom / 3.0 + 2.0 / 3.0 * mom3,
                                 state.etot / 3.0 + 2.0 / 3.0 * etot3, t + dt)


def rhs_euler(state: FluidState, gas, filter_amplitude: float = 0.0):
    return EulerSolver(gas, state.grid, filter_amplitude).rhs(state)


def _quadratic_drain(solver: EulerSolver, state: FluidState) -> float:
    """-sum_U int U . F(U) for the unit-amplitude filter F, a non-negative rate"""
    filtered = solver.filter_tendency(state)
    grid = solver.grid
    return -(inner_product(state.rho, filtered[0], grid) + inner_product(state.mom, filtered[1], grid)
             + inner_product(state.etot, filtered[2], grid))


def calibrate_filter(solver: EulerSolver, state: FluidState, t_end: float, nominal: float) -> float:
    """
    Shrinks the nominal filter amplitude until its predicted quadratic energy
    drain over [0, t_end], estimated on the first steps, stays below
    FILTER_BUDGET of the initial total energy.
    """
    if nominal == 0:
        return 0.0
    solver.filter_amplitude = nominal
    dt = solver.stable_dt(state)
    rates = []
    current = state
    for _ in range(CALIBRATION_STEPS):
        rates.append(max(_quadratic_drain(solver, current), 0.0))
        current = solver.step(current, dt)
    rate = float(np.mean(rates))
    energy = integral(state.etot, solver.grid)
    amplitude = nominal if rate == 0 else min(nominal, FILTER_BUDGET * energy / (rate * t_end))
    Logger.debug(f'filter amplitude calibrated to {amplitude:.3e} (nominal {nominal})', TAG)
    return amplitude


class EulerTrajectory:
    """Uniformly spaced Euler snapshots on the reference grid"""

    def __init__(self, grid: Grid, gas, dt: float, filter_amplitude: float):
        self.grid = grid
        self.gas = gas
        self.dt = dt
        self.filter_amplitude = filter_amplitude
        self.states = []
        self.terminated_at = None
        self.failure = None

    @property
    def times(self) -> np.ndarray:
        return np.array([state.time for state in self.states])

    def primitive(self, index: int) -> PrimitiveState:
        return EulerSolver(self.gas, self.grid).primitive(self.states[index])

    def energy_drift(self) -> float:
        """Relative change of the total energy between the first and last snapshot"""
        first = integral(self.states[0].etot, self.grid)
        return abs(integral(self.states[-1].etot, self.grid) - first) / abs(first)
