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
Initial data families of the sweep.

Every scenario gives the Euler initial data; the NSF initial data equal them
for well-prepared runs and carry an extra density and temperature mode of
relative size ill_amplitude / 2 for ill-prepared runs.
"""

from dataclasses import dataclass

import numpy as np

from ..grid_fields.fields import InitialData
from ..grid_fields.grid import PERIODIC, SLIP
from ..utility.exceptions import ConfigError
from ..utility.utils import require

PREPARATIONS = ('well', 'ill')


@dataclass(frozen=True)
class Scenario:
    name: str
    euler_initial: InitialData
    nsf_initial: InitialData
    preparation: str
    # boundary kind the data are built for along x
    boundary: str


def _zeros(coordinates):
    return np.zeros_like(coordinates[0])


def _components(first, coordinates) -> list:
    return [first] + [_zeros(coordinates) for _ in coordinates[1:]]


def slab(amplitude: float, length: float = 1.0) -> InitialData:
    """Entropy and acoustic perturbation of the uniform state between slip walls at x = 0 and x = length"""
    k = np.pi / length

    def rho0(c):
        return 1.0 + amplitude * np.cos(k * c[0])

    def theta0(c):
        return 1.0 + 0.5 * amplitude * np.cos(2.0 * k * c[0])

    def u0(c):
        return _components(0.5 * amplitude * np.sin(k * c[0]), c)

    return InitialData(rho0, theta0, u0, 'slab', {'amplitude': amplitude, 'length': length})


def compression(amplitude: float, length: float = 1.0) -> InitialData:
    """Periodic compressive velocity u = -A sin(2 pi x / length); steepens in finite time"""
    k = 2.0 * np.pi / length

    def u0(c):
        return _components(-amplitude * np.sin(k * c[0]), c)

    return InitialData(lambda c: np.ones_like(c[0]), lambda c: np.ones_like(c[0]), u0, 'compression',
                       {'amplitude': amplitude, 'length': length})


def shear(amplitude: float, length: float = 1.0) -> InitialData:
    """Steady Euler shear layer u = (A cos(pi y / length), 0) between slip walls in y"""
    k = np.pi / length

    def u0(c):
        require(len(c) == 2, "the shear scenario is two-dimensional")
        return [amplitude * np.cos(k * c[1]), np.zeros_like(c[0])]

    return InitialData(lambda c: np.ones_like(c[0]), lambda c: np.ones_like(c[0]), u0, 'shear',
                       {'amplitude': amplitude, 'length': length})


def ill_prepared(initial: InitialData, ill_amplitude: float, length: float = 1.0) -> InitialData:
    """Adds the mode 1 + (eps/2) cos(4 pi x / length) to density and temperature"""
    require(0 < ill_amplitude < 2, "ill_amplitude should lie in (0, 2)")
    k = 4.0 * np.pi / length

    def factor(c):
        return 1.0 + 0.5 * ill_amplitude * np.cos(k * c[0])

    parameters = dict(initial.parameters, ill_amplitude=ill_amplitude)
    return InitialData(lambda c: initial.rho0(c) * factor(c), lambda c: initial.theta0(c) * factor(c),
                       initial.u0, f'{initial.name}-ill', parameters)


SCENARIOS = {
    'slab': (slab, SLIP),
    'compression': (compression, PERIODIC),
    'shear': (shear, PERIODIC),
}


def scenario_by_name(name: str, amplitude: float = 0.05, preparation: str = 'well', ill_amplitude: float = 0.5,
                     length: float = 1.0) -> Scenario:
    """
    :param name: 'slab', 'compression' or 'shear'
    :param preparation: 'well' or 'ill'
    :raise ConfigError: unknown name or preparation
    """
    if name not in SCENARIOS:
        raise ConfigError(f"unknown scenario '{name}'", known=sorted(SCENARIOS))
    if preparation not in PREPARATIONS:
        raise ConfigError(f"unknown preparation '{preparation}'", known=PREPARATIONS)
    factory, boundary = SCENARIOS[name]
    euler_initial = factory(amplitude, length)
    nsf_initial = euler_initial if preparation == 'well' else ill_prepared(euler_initial, ill_amplitude, length)
    return Scenario(name, euler_initial, nsf_initial, preparation, boundary)
