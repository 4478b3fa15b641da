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

import sys
from argparse import ArgumentParser
from os import path

import numpy as np

from nsflab.diagnostics.bounds import uniform_bounds
from nsflab.euler_reference.lifespan import lifespan_monitor
from nsflab.euler_reference.reference import run_reference
from nsflab.grid_fields.fields import FluidState
from nsflab.grid_fields.snapshot import profile_rows, read_snapshot
from nsflab.nsf_solver.simulate import Trajectory, simulate
from nsflab.relative_energy.coercivity import coercivity_constant
from nsflab.sweep.sweep import fit_rate, load_manifest, rerun_diagnostics, run_sweep
from nsflab.thermo.closures import gibbs_residual
from nsflab.thermo.hypotheses import hypothesis_report
from nsflab.thermo.scaling import ScalingParams
from nsflab.utility.exceptions import LabException
from nsflab.utility.logger import Logger
from run_config.loader import load_config
from run_config.writer import FileWriter

OUTPUT_ROOT_DIR = 'out'
MANIFEST = 'manifest.json'

Z_GRID = np.logspace(-6.0, 8.0, 281)
THETA_GRID = np.logspace(-3.0, 3.0, 121)
GIBBS_GRID = np.logspace(-1.0, 1.0, 30)


def parse_args(argv=None) -> 'parser':
    """Gets arguments from CLI and parse the arguments.

    :return parser arguments: parser object's arguments
    """
    parser = ArgumentParser(usage='''

    ============================================================================
    CLI of the vanishing dissipation lab
    ============================================================================

        Commands:
            thermo-check    hypothesis report and Gibbs residuals of the gas
            coercivity      coercivity constant c(K) of the relative energy
            simulate        single NSF run (--euler: Euler reference run)
            sweep           runs along the scaling path, writes the manifest
            rate-fit        rate fit of a stored manifest
            diag            diagnostics recomputed from stored snapshots
            clean           removes the output directory
        ''')

    parser.add_argument('command', choices=['thermo-check', 'coercivity', 'simulate', 'sweep', 'rate-fit',
                                            'diag', 'clean'])
    parser.add_argument('--config', default=None, help='configuration file')
    parser.add_argument('--out', default=OUTPUT_ROOT_DIR, help='output directory')
    parser.add_argument('--seed', type=int, default=0, help='seed of the sampling estimates')
    parser.add_argument('--threads', type=int, default=1,
                        help='worker threads of the sweep; other commands run serially')
    parser.add_argument('--euler', action='store_true', help='simulate: run the Euler reference instead')
    parser.add_argument('--verbose', action='store_true', help='debug logging')
    return parser.parse_args(argv)


def thermo_check(config, file_writer: FileWriter) -> None:
    gas, transport = config.gas(), config.transport()
    report = hypothesis_report(gas, transport, Z_GRID, THETA_GRID)
    for line in report.lines():
        print(line)

    rho, theta = np.meshgrid(GIBBS_GRID, GIBBS_GRID, indexing='ij')
    summary = {'pattern': {name: 'PASS' if passed else 'FAIL' for name, passed in report.pattern.items()}}
    for a in sorted({0.0, config['scaling.a']}):
        thermal, mechanical = gibbs_residual(gas, a, rho, theta).relative()
        worst = max(float(np.max(thermal)), float(np.max(mechanical)))
        summary[f'gibbs.a={a!r}'] = worst
        print(f'Gibbs residual (relative) at a = {a!r}: {worst:.3e}')
    file_writer.write_summary('thermo_check.txt', summary)


def coercivity(config, file_writer: FileWriter, seed: int) -> None:
    K = config.coercivity_rectangle()
    c = coercivity_constant(config.gas(), config['scaling.a'], K, config['coercivity.samples'], seed)
    print(f'c(K) = {c!r} on K = {K}')
    file_writer.write_summary('coercivity.txt', {'K': repr(K), 'samples': config['coercivity.samples'],
                                                 'seed': seed, 'c': c})


def simulate_once(config, file_writer: FileWriter, euler: bool) -> None:
    scenario = config.scenario()
    run = config.nsf_run()
    if euler:
        grid = run.grid.refined(config['euler.refinement'])
        trajectory = run_reference(run.gas, scenario.euler_initial, grid, run.t_end, cfl=config['euler.cfl'],
                                   filter_nominal=config['euler.filter'], cache_dir=config['cache.dir'] or None)
        report = lifespan_monitor(trajectory, run.t_end, config['euler.growth_factor'], config['euler.safety'])
        rows = [[t, g_u, g_rho] for t, g_u, g_rho in zip(report.times, report.grad_u, report.grad_rho)]
        file_writer.write_csv('euler/lifespan.csv', ['t', 'max_grad_u', 'max_grad_rho'], rows)
        file_writer.write_summary('euler/summary.txt', {
            'smooth': report.smooth, 't_star': report.t_star, 't_safe': report.t_safe, 'reason': report.reason,
            'filter_amplitude': trajectory.filter_amplitude, 'energy_drift': trajectory.energy_drift()})
        last = trajectory.states[-1]
        print(f'Euler reference: {report.reason}, T_safe = {report.t_safe!r}')
    else:
        trajectory = simulate(run, scenario.nsf_initial, dump_path=path.join(file_writer.output_root_dir,
                                                                              'nsf', 'failure.snap'))
        header, rows = trajectory.table()
        file_writer.write_csv('nsf/solver.csv', header, rows)
        file_writer.write_summary('nsf/summary.txt', {'healthy': trajectory.healthy,
                                                      'failure': trajectory.failure,
                                                      'data_bounds': trajectory.data_bounds.as_dict(),
                                                      'bounds': dict(uniform_bounds(trajectory)._asdict())})
        last = trajectory.states[-1]
        print(f'NSF run finished at t = {last.time!r}, healthy = {trajectory.healthy}')
    if last.grid.dim == 1:
        header, rows = profile_rows(last.grid, last.fields())
        file_writer.write_csv('euler/profile.csv' if euler else 'nsf/profile.csv', header, rows)


def sweep(config, file_writer: FileWriter, threads: int) -> None:
    manifest = run_sweep(config.sweep_settings(), file_writer, threads)
    for point in manifest.points:
        state = f'E_sup = {point.E_sup!r}, envelope = {point.envelope!r}' if point.healthy else point.failure
        print(f'{point.run_id}: {state}')
    if manifest.fit is not None:
        print(f"fitted constant {manifest.fit['constant']!r}, flagged = {manifest.fit['flagged']}")


def rate_fit(file_writer: FileWriter) -> None:
    manifest = load_manifest(path.join(file_writer.output_root_dir, MANIFEST))
    fit = fit_rate(manifest)
    for run_id, ratio in zip(fit.runs, fit.ratios):
        print(f'{run_id}: ratio {ratio!r}')
    print(f'fitted constant {fit.constant!r}, flagged = {fit.flagged}')
    file_writer.write_summary('rate_fit.txt', {'constant': fit.constant, 'flagged': fit.flagged,
                                               'ratios': ' '.join(repr(r) for r in fit.ratios)})


def diag(config, file_writer: FileWriter) -> None:
    settings = config.sweep_settings()
    manifest = load_manifest(path.join(file_writer.output_root_dir, MANIFEST))
    trajectories = {}
    for point in manifest.points:
        if not point.healthy:
            continue
        run = settings.run.with_scaling(ScalingParams(point.scaling['a'], point.scaling['nu'],
                                                      point.scaling['omega'], point.scaling['lambda']))
        directory = path.join(file_writer.output_root_dir, 'runs', point.run_id, 'snapshots')
        states = []
        index = 0
        while path.isfile(path.join(directory, f'{index:04d}.snap')):
            snapshot = read_snapshot(path.join(directory, f'{index:04d}.snap'))
            states.append(FluidState.from_fields(snapshot.grid, snapshot.fields, snapshot.time))
            index += 1
        trajectories[point.run_id] = Trajectory.from_states(run, states)
    results = rerun_diagnostics(settings, manifest, trajectories, file_writer)
    print(f'diagnostics recomputed for {len(results)} runs')


def main(argv=None) -> int:
    """Main procedure"""
    args = parse_args(argv)
    Logger.configure(args.verbose)
    file_writer = FileWriter(args.out)

    if args.command == 'clean':
        print("Removed output directory successfully" if file_writer.clean() else "No exist output directory")
        return 0

    try:
        config = load_config(args.config)
        if args.command == 'thermo-check':
            thermo_check(config, file_writer)
        elif args.command == 'coercivity':
            coercivity(config, file_writer, args.seed)
        elif args.command == 'simulate':
            simulate_once(config, file_writer, args.euler)
        elif args.command == 'sweep':
            sweep(config, file_writer, args.threads)
        elif args.command == 'rate-fit':
            rate_fit(file_writer)
        elif args.command == 'diag':
            diag(config, file_writer)
    except LabException as e:
        print(f'{type(e).__name__}: {e}')
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
