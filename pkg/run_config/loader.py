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

from dataclasses import dataclass

from nsflab.grid_fields.grid import Grid
from nsflab.nsf_solver.config import NsfRunConfig
from nsflab.relative_energy.window import EssentialResidualWindow
from nsflab.sweep.path import ScalingPath
from nsflab.sweep.scenarios import scenario_by_name
from nsflab.sweep.sweep import SweepSettings
from nsflab.thermo.gas_model import gas_model_by_name
from nsflab.thermo.scaling import ScalingParams
from nsflab.thermo.transport_model import transport_model_by_name
from nsflab.utility.exceptions import ConfigError, LabException
from nsflab.utility.logger import Logger

from .schema import schema

TAG = 'Config'

PARSERS = {
    'str': str,
    'int': int,
    'float': float,
    'floats': lambda text: [float(item) for item in text.split()],
    'ints': lambda text: [int(item) for item in text.split()],
    'strs': lambda text: text.split(),
}


def parse_config_text(text: str) -> dict:
    """
    Parses `key = value` lines into typed values

    :raise ConfigError: malformed line, duplicate or unknown key, unparseable value
    """
    values = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigError("expected 'key = value'", line=number)
        key, value = (part.strip() for part in line.split('=', 1))
        if key not in schema:
            raise ConfigError(f"unknown configuration key '{key}'", line=number)
        if key in values:
            raise ConfigError(f"duplicate configuration key '{key}'", line=number)
        kind = schema[key][0]
        try:
            values[key] = PARSERS[kind](value)
        except ValueError:
            raise ConfigError(f"value of '{key}' should be of type {kind}", line=number, value=value)
    return values


def _per_axis(values: list, dim: int, key: str) -> tuple:
    if len(values) == 1:
        return tuple(values) * dim
    if len(values) != dim:
        raise ConfigError(f"{key} should have one entry or one per axis", dim=dim, entries=len(values))
    return tuple(values)


def _range(values: list, key: str) -> tuple:
    if len(values) != 2:
        raise ConfigError(f"{key} should hold two values", entries=len(values))
    return float(values[0]), float(values[1])


@dataclass(frozen=True)
class RunConfig:
    """
    Typed configuration values with builders of the library objects.
    Builders turn library errors on bad values into ConfigError.
    """
    values: dict

    def __getitem__(self, key: str):
        if key not in schema:
            raise ConfigError(f"unknown configuration key '{key}'")
        return self.values.get(key, schema[key][1])

    def with_overrides(self, **overrides) -> 'RunConfig':
        """Overrides given with '_' in place of '.', e.g. scaling_a=1e-3"""
        values = dict(self.values)
        for name, value in overrides.items():
            key = name.replace('_', '.', 1) if name not in schema else name
            if key not in schema:
                raise ConfigError(f"unknown configuration key '{key}'")
            values[key] = value
        return RunConfig(values)

    def _build(self, what: str, factory, *args, **kwargs):
        try:
            return factory(*args, **kwargs)
        except ConfigError:
            raise
        except LabException as e:
            raise ConfigError(f"invalid {what} configuration: {e}")

    def gas(self):
        return self._build('gas', gas_model_by_name, self['gas.name'], self['gas.expression'] or None,
                           self['gas.s0'], limit_tolerance=self['gas.limit_tolerance'])

    def transport(self):
        return self._build('transport', transport_model_by_name, self['transport.name'], self['transport.b'],
                           self['transport.mu'] or None, self['transport.eta'] or None,
                           self['transport.kappa'] or None)

    def scaling(self) -> ScalingParams:
        return self._build('scaling', ScalingParams, self['scaling.a'], self['scaling.nu'],
                           self['scaling.omega'], self['scaling.lambda'])

    def grid(self) -> Grid:
        dim = self['grid.dim']
        return self._build('grid', Grid, _per_axis(self['grid.extents'], dim, 'grid.extents'),
                           _per_axis(self['grid.cells'], dim, 'grid.cells'),
                           _per_axis(self['grid.bc'], dim, 'grid.bc'))

    def nsf_run(self) -> NsfRunConfig:
        return self._build('run', NsfRunConfig, self.gas(), self.transport(), self.scaling(), self.grid(),
                           cfl=self['cfl'], t_end=self['t_end'], output_stride=self['output.stride'],
                           rho_floor=self['floors.rho'], theta_floor=self['floors.theta'],
                           reconstruction=self['reconstruction'])

    def path(self) -> ScalingPath:
        return self._build('path', ScalingPath, tuple(self['path.a_values']), self['path.alpha'],
                           self['path.beta'], self['path.gamma'])

    def scenario(self):
        return self._build('scenario', scenario_by_name, self['scenario.name'], self['scenario.amplitude'],
                           self['scenario.preparation'], self['scenario.ill_amplitude'],
                           length=self.grid().extents[0])

    def coercivity_rectangle(self) -> tuple:
        return _range(self['coercivity.rho_range'], 'coercivity.rho_range'), \
               _range(self['coercivity.theta_range'], 'coercivity.theta_range')

    def window(self) -> EssentialResidualWindow:
        (rho_lo, rho_hi), (theta_lo, theta_hi) = self.coercivity_rectangle()
        return self._build('window', EssentialResidualWindow, rho_lo, rho_hi, theta_lo, theta_hi,
                           self['window.margin'])

    def sweep_settings(self) -> SweepSettings:
        return SweepSettings(self.nsf_run(), self.path(), self.scenario(),
                             euler_refinement=self['euler.refinement'], euler_cfl=self['euler.cfl'],
                             euler_filter=self['euler.filter'], growth_factor=self['euler.growth_factor'],
                             safety=self['euler.safety'], cache_dir=self['cache.dir'] or None,
                             window=self.window())

    def lines(self) -> list:
        """`key = value` lines of every schema key, defaults included"""
        lines = []
        for key in schema:
            value = self[key]
            text = ' '.join(str(v) for v in value) if isinstance(value, list) else str(value)
            lines.append(f'{key} = {text}')
        return lines


def load_config(file_path: str = None) -> RunConfig:
    """
    :param file_path: (Optional) configuration file; schema defaults when omitted
    :return: RunConfig
    :raise ConfigError: unreadable file or invalid content
    """
    if not file_path:
        return RunConfig({})
    try:
        with open(file_path, 'r') as f:
            text = f.read()
    except OSError as e:
        raise ConfigError(f"cannot read configuration file: {e}", path=file_path)
    values = parse_config_text(text)
    Logger.debug(f'{len(values)} keys loaded from {file_path}', TAG)
    return RunConfig(values)
