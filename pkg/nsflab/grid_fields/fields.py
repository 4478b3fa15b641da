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

from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from ..thermo.closures import rho_internal_energy
from ..utility.exceptions import DomainError
from ..utility.utils import require, require_finite, require_positive
from .grid import Grid


def _vector_shape(grid: Grid) -> tuple:
    return (grid.dim,) + grid.shape


@dataclass(frozen=True)
class FluidState:
    """
    Conservative cell averages: rho, mom = rho u (shape (d, ...)) and
    etot = rho |u|^2 / 2 + rho e.
    """
    grid: Grid
    rho: np.ndarray
    mom: np.ndarray
    etot: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        require(np.shape(self.rho) == self.grid.shape, "rho should have the grid shape")
        require(np.shape(self.mom) == _vector_shape(self.grid), "mom should have shape (d, *cells)")
        require(np.shape(self.etot) == self.grid.shape, "etot should have the grid shape")

    def velocity(self) -> np.ndarray:
        return self.mom / self.rho

    def kinetic_energy(self) -> np.ndarray:
        return 0.5 * np.sum(self.mom ** 2, axis=0) / self.rho

    def internal_energy_density(self) -> np.ndarray:
        return self.etot - self.kinetic_energy()

    def with_fields(self, rho=None, mom=None, etot=None, time=None) -> 'FluidState':
        return replace(self,
                       rho=self.rho if rho is None else rho,
                       mom=self.mom if mom is None else mom,
                       etot=self.etot if etot is None else etot,
                       time=self.time if time is None else float(time))

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.rho)) and np.all(np.isfinite(self.mom))
                    and np.all(np.isfinite(self.etot)))

    def fields(self) -> dict:
        """Named interior arrays, in snapshot order"""
        named = {'rho': self.rho}
        for axis in range(self.grid.dim):
            named[f'mom{axis}'] = self.mom[axis]
        named['etot'] = self.etot
        return named

    @classmethod
    def from_fields(cls, grid: Grid, named: dict, time: float) -> 'FluidState':
        mom = np.stack([named[f'mom{axis}'] for axis in range(grid.dim)])
        return cls(grid, np.asarray(named['rho']), mom, np.asarray(named['etot']), float(time))


@dataclass(frozen=True)
class PrimitiveState:
    grid: Grid
    rho: np.ndarray
    u: np.ndarray
    theta: np.ndarray
    time: float = 0.0


@dataclass(frozen=True)
class ReferenceFields:
    """Smooth Euler trio (rho_E, theta_E, u_E) at cell centers of `grid`"""
    grid: Grid
    rho_E: np.ndarray
    theta_E: np.ndarray
    u_E: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        require(np.shape(self.rho_E) == self.grid.shape, "rho_E should have the grid shape")
        require(np.shape(self.theta_E) == self.grid.shape, "theta_E should have the grid shape")
        require(np.shape(self.u_E) == _vector_shape(self.grid), "u_E should have shape (d, *cells)")
        require_positive(self.rho_E, 'rho_E')
        require_positive(self.theta_E, 'theta_E')
        require_finite(self.u_E, name='u_E')

    @classmethod
    def from_primitive(cls, primitive: PrimitiveState) -> 'ReferenceFields':
        return cls(primitive.grid, primitive.rho, primitive.theta, primitive.u, primitive.time)


def conservative_from_primitive(gas, a: float, grid: Grid, rho, u, theta, time: float = 0.0) -> FluidState:
    rho = np.asarray(rho, dtype=float)
    u = np.asarray(u, dtype=float)
    theta = np.asarray(theta, dtype=float)
    mom = rho * u
    etot = 0.5 * rho * np.sum(u ** 2, axis=0) + rho_internal_energy(gas, a, rho, theta)
    return FluidState(grid, rho, mom, etot, float(time))


@dataclass(frozen=True)
class InitialData:
    """
    Initial data as functions of the coordinates.

    Each callable receives a tuple of coordinate arrays (one per axis) and
    returns an array of the same shape; `u0` returns a sequence of d components.
    """
    rho0: Callable
    theta0: Callable
    u0: Callable
    name: str = 'custom'
    parameters: dict = field(default_factory=dict)

    def velocity_at(self, coordinates: tuple) -> np.ndarray:
        shape = np.shape(coordinates[0])
        return np.stack([np.broadcast_to(np.asarray(c, dtype=float), shape) for c in self.u0(coordinates)])

    def primitive(self, grid: Grid) -> PrimitiveState:
        coordinates = grid.mesh()
        shape = grid.shape
        rho = np.broadcast_to(np.asarray(self.rho0(coordinates), dtype=float), shape).copy()
        theta = np.broadcast_to(np.asarray(self.theta0(coordinates), dtype=float), shape).copy()
        u = self.velocity_at(coordinates)
        require(u.shape[0] == grid.dim, "u0 should return one component per axis")
        require(bool(np.all(rho > 0)) and bool(np.all(theta > 0)),
                "initial density and temperature should be greater than 0", DomainError)
        return PrimitiveState(grid, rho, u, theta, 0.0)

    def state(self, grid: Grid, gas, a: float) -> FluidState:
        primitive = self.primitive(grid)
        return conservative_from_primitive(gas, a, grid, primitive.rho, primitive.u, primitive.theta, 0.0)

    def fingerprint(self) -> str:
        parameters = ';'.join(f'{key}={self.parameters[key]!r}' for key in sorted(self.parameters))
        return f'{self.name}({parameters})'
