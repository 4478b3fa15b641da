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

import math

from ..grid_fields.grid import Grid
from ..utility.exceptions import DomainError, LabException
from ..utility.logger import Logger
from ..utility.utils import require
from .cache import ReferenceCache, reference_key
from .compatibility import compatibility_check
from .euler_solver import EulerSolver, EulerTrajectory, calibrate_filter

TAG = 'EulerReference'


def run_reference(gas, initial, grid: Grid, t_end: float, cfl: float = 0.4, filter_nominal: float = 1.0,
                  stride: int = 1, dt: float = None, cache_dir: str = None) -> EulerTrajectory:
    """
    Runs the Euler reference on `grid` (already refined) up to t_end or until the
    solution leaves its life span (positivity loss, non-finite values).

    :param gas: GasModel
    :param initial: InitialData
    :param grid: reference Grid
    :param t_end: final time
    :param cfl: Courant number fixing the time step from the initial state
    :param filter_nominal: nominal filter amplitude before calibration
    :param stride: steps between stored snapshots
    :param dt: (Optional) explicit fixed time step
    :param cache_dir: (Optional) directory of the trajectory cache
    :return: EulerTrajectory
    :raise DomainError: the initial data violate u0.n = 0 on a slip wall
    """
    cache, key = None, None
    if cache_dir:
        cache = ReferenceCache(cache_dir)
        key = reference_key(initial, grid, gas, t_end=t_end, cfl=cfl, filter_nominal=filter_nominal,
                            stride=stride, dt=dt)
        cached = cache.load(key, grid, gas)
        if cached is not None:
            return cached

    if grid.slip_axes:
        report = compatibility_check(initial, grid, gas)
        require(report.accepted, "initial velocity is not tangential on the slip walls", DomainError,
                max_normal_velocity=report.k0_max)
    state = initial.state(grid, gas, 0.0)
    solver = EulerSolver(gas, grid, 0.0, cfl)
    base_dt = dt if dt is not None else solver.stable_dt(state)
    steps = max(1, math.ceil(t_end / base_dt - 1e-9))
    solver.dt = t_end / steps
    solver.filter_amplitude = calibrate_filter(solver, state, t_end, filter_nominal)

    trajectory = EulerTrajectory(grid, gas, solver.dt, solver.filter_amplitude)
    trajectory.states.append(state)
    Logger.info(f'Euler reference: {grid.cells} cells, {steps} steps of {solver.dt:.3e}', TAG)
    for n in range(1, steps + 1):
        try:
            advanced = solver.step(state, solver.dt).with_fields(time=n * solver.dt)
            require(advanced.is_finite(), "non-finite Euler state", LabException)
            solver.primitive(advanced)
        except LabException as e:
            trajectory.terminated_at = n * solver.dt
            trajectory.failure = str(e)
            Logger.info(f'Euler reference left its life span at t = {trajectory.terminated_at:.6g}: {e}', TAG)
            break
        state = advanced
        if n % stride == 0 or n == steps:
            trajectory.states.append(state)

    if cache is not None:
        cache.store(key, trajectory)
    return trajectory
