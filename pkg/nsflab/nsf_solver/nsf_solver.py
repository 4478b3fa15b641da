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

from ..grid_fields.boundary import fill_ghosts
from ..grid_fields.calculus import flux_divergence, gradient
from ..grid_fields.fields import FluidState, PrimitiveState
from ..grid_fields.norms import integral
from ..interfaces.abc_solver import ABCSolver
from ..thermo.closures import (
    heat_capacity_cv, rho_internal_energy, sound_speed, stress_tensor, heat_flux
)
from ..utility.exceptions import NumericalError
from ..utility.logger import Logger
from ..utility.utils import require
from .config import NsfRunConfig, UNHEALTHY_FRACTION
from .fluxes import reconstruct_state, rusanov_flux, viscous_flux
from .temperature import recover_temperature

TAG = 'NsfSolver'


class NsfSolver(ABCSolver):
    """
    Finite-volume solver of the Navier-Stokes-Fourier system in total energy form

        d_t rho  + div(rho u)                                 = 0
        d_t m    + div(rho u x u + p I) - div S              = -lambda u
        d_t E    + div((E + p) u) - div(S u) + div q          = -lambda |u|^2

    with Rusanov convective fluxes, centered viscous fluxes and SSP-RK3 in time.
    """

    def __init__(self, config: NsfRunConfig):
        self.config = config
        self.floor_hits = 0
        self.step_floor_hits = 0
        self.fallback_faces = 0
        self.healthy = True

    @property
    def grid(self):
        return self.config.grid

    def primitive(self, state: FluidState) -> PrimitiveState:
        theta = recover_temperature(state.rho, state.mom, state.etot, self.config.gas, self.config.a)
        return PrimitiveState(state.grid, state.rho, state.velocity(), theta, state.time)

    def rhs(self, state: FluidState, t: float = None):
        """
        :return: (d rho/dt, d mom/dt, d etot/dt) on the interior cells
        """
        config = self.config
        grid = self.grid
        grid.require_same(state.grid, 'state and solver')
        scaling = config.scaling
        primitive = self.primitive(state)
        rho = fill_ghosts(primitive.rho, grid)
        u = fill_ghosts(primitive.u, grid, vector=True)
        theta = fill_ghosts(primitive.theta, grid)
        viscous = scaling.nu > 0 or scaling.omega > 0

        d_rho = np.zeros(grid.shape)
        d_mom = np.zeros((grid.dim,) + grid.shape)
        d_etot = np.zeros(grid.shape)
        for axis in range(grid.dim):
            left, right, fallbacks = reconstruct_state(rho, u, theta, axis, config.reconstruction)
            self.fallback_faces += fallbacks
            flux = rusanov_flux(config.gas, config.a, left, right, axis)
            mom_flux, etot_flux = flux.mom, flux.etot
            if viscous:
                visc_mom, visc_etot = viscous_flux(config.transport, scaling.nu, scaling.omega, u, theta, axis)
                mom_flux = mom_flux - visc_mom
                etot_flux = etot_flux - visc_etot
            d_rho -= flux_divergence(flux.rho, grid, axis)
            d_mom -= flux_divergence(mom_flux, grid, axis, leading=1)
            d_etot -= flux_divergence(etot_flux, grid, axis)

        if scaling.lam > 0:
            d_mom -= scaling.lam * primitive.u
            d_etot -= scaling.lam * np.sum(primitive.u ** 2, axis=0)
        if config.forcing is not None:
            f_rho, f_mom, f_etot = config.forcing(state.time if t is None else t)
            d_rho = d_rho + f_rho
            d_mom = d_mom + f_mom
            d_etot = d_etot + f_etot
        return d_rho, d_mom, d_etot

    def stable_dt(self, state: FluidState) -> float:
        """
        dt = cfl min(dx / (|u| + c), dx^2 / (2 d D_max)),  D_max = max(nu mu / rho, omega kappa / (rho c_v))
        """
        if self.config.dt is not None:
            return self.config.dt
        config = self.config
        scaling = config.scaling
        primitive = self.primitive(state)
        c = sound_speed(config.gas, config.a, primitive.rho, primitive.theta)
        acoustic = min(float(np.min(h / (np.abs(primitive.u[axis]) + c)))
                       for axis, h in enumerate(self.grid.spacing))
        diffusivity = np.zeros(self.grid.shape)
        if scaling.nu > 0:
            diffusivity = np.maximum(diffusivity, scaling.nu * config.transport.mu(primitive.theta) / primitive.rho)
        if scaling.omega > 0:
            cv = heat_capacity_cv(config.gas, primitive.rho, primitive.theta)
            diffusivity = np.maximum(diffusivity,
                                     scaling.omega * config.transport.kappa(primitive.theta) / (primitive.rho * cv))
        d_max = float(np.max(diffusivity))
        h_min = min(self.grid.spacing)
        diffusive = h_min ** 2 / (2.0 * self.grid.dim * d_max) if d_max > 0 else np.inf
        dt = config.cfl * min(acoustic, diffusive)
        if not (np.isfinite(dt) and dt > 0):
            raise NumericalError("stable time step is not positive", tolerance=float(dt), time=state.time)
        return dt

    def _apply_floors(self, state: FluidState) -> FluidState:
        config = self.config
        rho, mom, etot = state.rho, state.mom, state.etot
        low_rho = ~(rho >= config.rho_floor)
        hits = int(np.count_nonzero(low_rho))
        if hits:
            rho = np.where(low_rho, config.rho_floor, rho)
        kinetic = 0.5 * np.sum(mom ** 2, axis=0) / rho
        floor_energy = rho_internal_energy(config.gas, config.a, rho, np.full(rho.shape, config.theta_floor))
        low_energy = ~(etot - kinetic >= floor_energy)
        energy_hits = int(np.count_nonzero(low_energy))
        if energy_hits:
            etot = np.where(low_energy, kinetic + floor_energy, etot)
        self.step_floor_hits += hits + energy_hits
        if hits or energy_hits:
            return state.with_fields(rho=rho, etot=etot)
        return state

    def _stage(self, state: FluidState, t: float, dt: float) -> tuple:
        d_rho, d_mom, d_etot = self.rhs(state, t)
        return state.rho + dt * d_rho, state.mom + dt * d_mom, state.etot + dt * d_etot

    def step(self, state: FluidState, dt: float) -> FluidState:
        """
        Shu-Osher SSP-RK3 step with positivity floors after every stage
        """
        require(dt > 0, "dt should be greater than 0")
        t = state.time
        self.step_floor_hits = 0

        rho1, mom1, etot1 = self._stage(state, t, dt)
        first = self._apply_floors(state.with_fields(rho1, mom1, etot1, t + dt))

        rho2, mom2, etot2 = self._stage(first, t + dt, dt)
        second = self._apply_floors(state.with_fields(
            0.75 * state.rho + 0.25 * rho2,
            0.75 * state.mom + 0.25 * mom2,
            0.75 * state.etot + 0.25 * etot2,
            t + 0.5 * dt))

        rho3, mom3, etot3 = self._stage(second, t + 0.5 * dt, dt)
        final = self._apply_floors(state.with_fields(
            state.rho / 3.0 + 2.0 / 3.0 * rho3,
            state.mom / 3.0 + 2.0 / 3.0 * mom3,
            state.etot / 3.0 + 2.0 / 3.0 * etot3,
            t + dt))

        self.floor_hits += self.step_floor_hits
        if self.step_floor_hits > UNHEALTHY_FRACTION * self.grid.cell_count:
            if self.healthy:
                Logger.warning(f'{self.step_floor_hits} floor activations at t = {t + dt}, run flagged unhealthy', TAG)
            self.healthy = False
        return final

    def entropy_production(self, state: FluidState) -> tuple:
        """
        sigma = (S : grad u + omega kappa |grad theta|^2 / theta) / theta from centered gradients

        :return: (sigma field, its domain integral)
        """
        config = self.config
        primitive = self.primitive(state)
        grad_u = gradient(fill_ghosts(primitive.u, self.grid, vector=True))
        grad_theta = gradient(fill_ghosts(primitive.theta, self.grid))
        theta = primitive.theta
        stress = stress_tensor(config.transport, config.scaling.nu, theta, grad_u)
        q = heat_flux(config.transport, config.scaling.omega, theta, grad_theta)
        viscous = np.sum(stress * grad_u, axis=(0, 1))
        thermal = -np.sum(q * grad_theta, axis=0) / theta
        sigma = (viscous + thermal) / theta
        return sigma, integral(sigma, self.grid)


def rhs_nsf(state: FluidState, config: NsfRunConfig, t: float = None):
    return NsfSolver(config).rhs(state, t)


def stable_dt(state: FluidState, config: NsfRunConfig) -> float:
    return NsfSolver(config).stable_dt(state)


def step(state: FluidState, dt: float, config: NsfRunConfig) -> FluidState:
    return NsfSolver(config).step(state, dt)


def entropy_production(state: FluidState, config: NsfRunConfig) -> tuple:
    return NsfSolver(config).entropy_production(state)
