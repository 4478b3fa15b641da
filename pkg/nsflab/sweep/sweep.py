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
Orchestration of a vanishing dissipation sweep: one Euler reference shared by
every point of the scaling path, one NSF run per point up to the safe time
T_safe, relative energy and diagnostics per run, and the rate fit.
"""

import hashlib
import json
from collections import namedtuple
from dataclasses import dataclass, field, replace

import numpy as np
from joblib import Parallel, delayed

from ..diagnostics.bounds import uniform_bounds, convergence_measure
from ..diagnostics.data_bounds import DataBounds
from ..diagnostics.envelope import rate_envelope
from ..diagnostics.inequality import rel_energy_inequality_residual
from ..euler_reference.lifespan import GROWTH_FACTOR, SAFETY, lifespan_monitor
from ..euler_reference.reference import run_reference
from ..euler_reference.sampling import sample_series
from ..nsf_solver.config import NsfRunConfig
from ..nsf_solver.simulate import simulate
from ..relative_energy.relative_energy import RelativeEnergyReport, relative_energy
from ..utility.exceptions import ConfigError, LabException
from ..utility.logger import Logger
from ..utility.utils import require
from .path import ScalingPath
from .scenarios import Scenario

TAG = 'Sweep'

MANIFEST_VERSION = 1
PLOT_COLUMNS = ('a', 'envelope', 'E_sup', 'E_sup/envelope')
# ratios spreading by more than this factor mean the bound is not tracked
RATIO_SPREAD = 10.0

RateFit = namedtuple('RateFit', 'constant ratios flagged runs')


@dataclass(frozen=True)
class SweepSettings:
    """
    Inputs of a sweep. `run` is the NSF template; its scaling and t_end are
    replaced per point.
    """
    run: NsfRunConfig
    path: ScalingPath
    scenario: Scenario
    euler_refinement: int = 2
    euler_cfl: float = 0.4
    euler_filter: float = 1.0
    growth_factor: float = GROWTH_FACTOR
    safety: float = SAFETY
    cache_dir: str = None
    window: object = None

    def fingerprint(self) -> str:
        run = self.run
        text = json.dumps({
            'gas': repr(run.gas), 'transport': repr(run.transport), 'grid': run.grid.header(),
            'cfl': run.cfl, 't_end': run.t_end, 'stride': run.output_stride, 'floors': [run.rho_floor, run.theta_floor],
            'reconstruction': run.reconstruction, 'path': self.path.as_dict(),
            'euler': [self.euler_refinement, self.euler_cfl, self.euler_filter, self.growth_factor, self.safety],
            'euler_initial': self.scenario.euler_initial.fingerprint(),
            'nsf_initial': self.scenario.nsf_initial.fingerprint(),
        }, sort_keys=True)
        return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class SweepPoint:
    run_id: str
    scaling: dict
    healthy: bool
    failure: str = None
    E_sup: float = None
    E_init: float = None
    envelope: float = None
    max_excess: float = None
    convergence: float = None
    bounds: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class SweepManifest:
    path: dict
    scenario: str
    preparation: str
    grid_hash: str
    config_hash: str
    t_safe: float
    lifespan: str
    data_bounds: dict
    points: list
    fit: dict = None

    def as_dict(self) -> dict:
        values = dict(self.__dict__)
        values['version'] = MANIFEST_VERSION
        values['points'] = [point.as_dict() for point in self.points]
        return values

    @classmethod
    def from_dict(cls, values: dict) -> 'SweepManifest':
        require(values.get('version') == MANIFEST_VERSION, "unsupported manifest version", ConfigError)
        values = {key: value for key, value in values.items() if key != 'version'}
        values['points'] = [SweepPoint(**point) for point in values['points']]
        return cls(**values)

    def plot_rows(self) -> list:
        rows = []
        for point in self.points:
            if point.healthy:
                rows.append([point.scaling['a'], point.envelope, point.E_sup, point.E_sup / point.envelope])
        return rows


def fit_rate(manifest) -> RateFit:
    """
    ratio_i = E_sup_i / (E_init_i + envelope_i) over the healthy runs; the
    fitted constant is the largest ratio. The fit is flagged when a ratio grows
    by more than a factor 10 over any earlier ratio along the path (a decreasing);
    ratios that shrink as a decreases track the bound.

    :param manifest: SweepManifest or its dict form
    :return: RateFit(constant, ratios, flagged, runs)
    """
    if isinstance(manifest, dict):
        manifest = SweepManifest.from_dict(manifest)
    healthy = [point for point in manifest.points if point.healthy]
    require(len(healthy) >= 2, "a rate fit needs at least two healthy runs", runs=len(healthy))
    ratios = [point.E_sup / (point.E_init + point.envelope) for point in healthy]
    smallest = np.minimum.accumulate(ratios)
    flagged = any(ratio > RATIO_SPREAD * earlier for ratio, earlier in zip(ratios[1:], smallest[:-1]))
    if flagged:
        Logger.warning(f'rate ratios grow beyond {RATIO_SPREAD:g}x along the path: {ratios}', TAG)
    return RateFit(max(ratios), ratios, flagged, [point.run_id for point in healthy])


def run_id(index: int, a: float) -> str:
    return f'p{index:02d}_a{a:.3e}'


def relative_energy_series(trajectory, reference) -> tuple:
    """E(tau) of an NSF trajectory against the sampled reference at its output instants"""
    config = trajectory.config
    references = sample_series(reference, trajectory.times, trajectory.grid)
    values = [relative_energy(state, trio, config.gas, config.a, theta)
              for state, trio, theta in zip(trajectory.states, references, trajectory.thetas)]
    return references, values


class PointResult(namedtuple('PointResult', 'point trajectory report inequality')):
    """Outcome of one sweep point; trajectory and diagnostics are None for failed runs"""


def run_point(settings: SweepSettings, config: NsfRunConfig, reference, identifier: str) -> PointResult:
    trajectory = simulate(config, settings.scenario.nsf_initial, raise_on_failure=False)
    point = SweepPoint(identifier, config.scaling.as_dict(), trajectory.healthy, trajectory.failure)
    if not trajectory.healthy:
        Logger.warning(f'{identifier}: unhealthy run excluded from the fit ({trajectory.failure})', TAG)
        return PointResult(point, trajectory, None, None)
    try:
        envelope = rate_envelope(config.scaling)
        references, values = relative_energy_series(trajectory, reference)
        report = RelativeEnergyReport.from_series(trajectory.times, values, envelope)
        inequality = rel_energy_inequality_residual(trajectory, reference, settings.window)
        point.E_sup, point.E_init, point.envelope = report.sup_value, report.initial, envelope
        point.max_excess = inequality.max_excess
        point.convergence = convergence_measure(trajectory, references)
        point.bounds = dict(uniform_bounds(trajectory)._asdict())
    except LabException as e:
        point.healthy, point.failure = False, str(e)
        Logger.warning(f'{identifier}: diagnostics failed ({e})', TAG)
        return PointResult(point, trajectory, None, None)
    Logger.info(f'{identifier}: E_sup = {point.E_sup:.4e}, envelope = {envelope:.4e}', TAG)
    return PointResult(point, trajectory, report, inequality)


def write_point(writer, result: PointResult) -> None:
    directory = f'runs/{result.point.run_id}'
    header, rows = result.trajectory.table()
    writer.write_csv(f'{directory}/solver.csv', header, rows)
    for index, state in enumerate(result.trajectory.states):
        writer.write_snapshot(f'{directory}/snapshots/{index:04d}.snap', state.grid, state.time, state.fields())
    if result.report is not None:
        writer.write_csv(f'{directory}/relative_energy.csv', ['t', 'E', 'envelope'], result.report.rows())
        writer.write_csv(f'{directory}/inequality.csv', result.inequality.header(), result.inequality.rows())
    writer.write_summary(f'{directory}/summary.txt', result.point.as_dict())


def run_sweep(settings: SweepSettings, writer=None, threads: int = 1) -> SweepManifest:
    """
    Runs the sweep.

    The Euler reference is computed once on the refined grid; T_safe is the
    safe fraction of its detected life span, or t_end when the reference stays
    smooth. Points run in a thread pool; results keep the path order, so
    outputs do not depend on the thread count.

    :param settings: SweepSettings
    :param writer: (Optional) Writer receiving CSVs, snapshots, plot data and the manifest
    :param threads: worker threads
    :return: SweepManifest
    :raise ConfigError: the scaling path violates the admissible exponent region
    """
    validation = settings.path.validate()
    if not validation.valid:
        raise ConfigError("invalid scaling path", violations=validation.violations)
    run = settings.run
    scenario = settings.scenario
    require(run.grid.bc[0] == scenario.boundary,
            f"scenario '{scenario.name}' needs {scenario.boundary} boundaries along x", ConfigError)
    data_bounds = DataBounds.from_primitive(scenario.nsf_initial.primitive(run.grid))

    reference = run_reference(run.gas, scenario.euler_initial, run.grid.refined(settings.euler_refinement),
                              run.t_end, cfl=settings.euler_cfl, filter_nominal=settings.euler_filter,
                              cache_dir=settings.cache_dir)
    lifespan = lifespan_monitor(reference, run.t_end, settings.growth_factor, settings.safety)
    t_safe = float(lifespan.t_safe)
    Logger.info(f'sweep over {len(settings.path.a_values)} points to T_safe = {t_safe:.6g} ({lifespan.reason})', TAG)

    configs = [replace(run, scaling=scaling, t_end=t_safe) for scaling in settings.path.points()]
    identifiers = [run_id(index, config.a) for index, config in enumerate(configs)]
    results = Parallel(n_jobs=threads, backend='threading')(
        delayed(run_point)(settings, config, reference, identifier)
        for config, identifier in zip(configs, identifiers))

    manifest = SweepManifest(settings.path.as_dict(), scenario.name, scenario.preparation, run.grid.signature(),
                             settings.fingerprint(), t_safe, lifespan.reason, data_bounds.as_dict(),
                             [result.point for result in results])
    if sum(point.healthy for point in manifest.points) >= 2:
        manifest.fit = dict(fit_rate(manifest)._asdict())

    if writer is not None:
        for result in results:
            write_point(writer, result)
        writer.write_plot_data('plot.dat', list(PLOT_COLUMNS), manifest.plot_rows())
        writer.write_manifest('manifest.json', manifest.as_dict())
    return manifest


def load_manifest(file_path: str) -> SweepManifest:
    """
    :raise ConfigError: unreadable or malformed manifest
    """
    try:
        with open(file_path, 'r') as f:
            values = json.load(f)
    except (OSError, ValueError) as e:
        raise ConfigError(f"cannot read manifest: {e}", path=file_path)
    return SweepManifest.from_dict(values)


def rerun_diagnostics(settings: SweepSettings, manifest: SweepManifest, trajectories: dict, writer=None) -> dict:
    """
    Recomputes relative energy and inequality diagnostics of stored trajectories

    :param trajectories: run_id -> Trajectory rebuilt from stored snapshots
    :return: run_id -> PointResult
    """
    run = settings.run
    reference = run_reference(run.gas, settings.scenario.euler_initial, run.grid.refined(settings.euler_refinement),
                              run.t_end, cfl=settings.euler_cfl, filter_nominal=settings.euler_filter,
                              cache_dir=settings.cache_dir)
    results = {}
    for point in manifest.points:
        if point.run_id not in trajectories:
            continue
        trajectory = trajectories[point.run_id]
        envelope = rate_envelope(trajectory.config.scaling)
        _, values = relative_energy_series(trajectory, reference)
        report = RelativeEnergyReport.from_series(trajectory.times, values, envelope)
        inequality = rel_energy_inequality_residual(trajectory, reference, settings.window)
        results[point.run_id] = PointResult(point, trajectory, report, inequality)
        if writer is not None:
            directory = f'runs/{point.run_id}'
            writer.write_csv(f'{directory}/relative_energy.csv', ['t', 'E', 'envelope'], report.rows())
            writer.write_csv(f'{directory}/inequality.csv', inequality.header(), inequality.rows())
    return results
