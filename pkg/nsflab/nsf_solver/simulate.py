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

from ..diagnostics.data_bounds import DataBounds
from ..grid_fields.fields import FluidState, InitialData, PrimitiveState, conservative_from_primitive
from ..grid_fields.norms import integral
from ..grid_fields.snapshot import write_snapshot
from ..utility.exceptions import LabException, NumericalError
from ..utility.logger import Logger
from ..utility.utils import require
from .config import NsfRunConfig
from .nsf_solver import NsfSolver
from .temperature import recover_temperature

TAG = 'Simulate'

DIAGNOSTIC_COLUMNS = ('t', 'mass', 'etot', 'damping_integral', 'sigma_integral', 'min_rho', 'min_theta',
                      'floor_hits')
# relative slack below which the remaining time is folded into the last step
END_SLACK = 1e-12


class Trajectory:
    """
    Output of an NSF run: states and diagnostic rows at the output instants.
    """

    def __init__(self, config: NsfRunConfig, data_bounds: DataBounds):
        self.config = config
        self.data_bounds = data_bounds
        self.states = []
        self.thetas = []
        self.rows = []
        self.healthy = True
        self.failure = None
        self.dump = None

    @property
    def grid(self):
        return self.config.grid

    @property
    def times(self) -> np.ndarray:
        return np.array([state.time for state in self.states])

    def column(self, name: str) -> np.ndarray:
        return np.array([row[name] for row in self.rows])

    def add(self, state: FluidState, theta: np.ndarray, row: dict):
        self.states.append(state)
        self.thetas.append(theta)
        self.rows.append(row)

    def table(self) -> tuple:
        return list(DIAGNOSTIC_COLUMNS), [[row[name] for name in DIAGNOSTIC_COLUMNS] for row in self.rows]

    @classmethod
    def from_states(cls, config: NsfRunConfig, states: list) -> 'Trajectory':
        """Rebuilds a trajectory from stored states; diagnostic rows are not restored"""
        require(len(states) > 0, "at least one stored state is required")
        thetas = [recover_temperature(s.rho, s.mom, s.etot, config.gas, config.a) for s in states]
        first = states[0]
        primitive = PrimitiveState(config.grid, first.rho, first.velocity(), thetas[0], first.time)
        trajectory = cls(config, DataBounds.from_primitive(primitive))
        trajectory.states = list(states)
        trajectory.thetas = thetas
        return trajectory


def _initial_state(config: NsfRunConfig, initial) -> FluidState:
    if isinstance(initial, InitialData):
        primitive = initial.primitive(config.grid)
        return conservative_from_primitive(config.gas, config.a, config.grid,
                                           primitive.rho, primitive.u, primitive.theta, 0.0)
    config.grid.require_same(initial.grid, 'initial state and run configuration')
    return initial


def _damping_power(config: NsfRunConfig, state: FluidState) -> float:
    if config.scaling.lam == 0:
        return 0.0
    return config.scaling.lam * integral(np.sum(state.velocity() ** 2, axis=0), config.grid)


def simulate(config: NsfRunConfig, initial, dump_path: str = None, raise_on_failure: bool = True) -> Trajectory:
    """
    Runs the NSF solver from t = 0 to config.t_end.

    A diagnostic row is recorded every config.output_stride steps and at t_end.
    The damping integral lambda int_0^t int |u|^2 is accumulated step by step
    with the trapezoid rule.

    :param config: NsfRunConfig
    :param initial: InitialData or FluidState at t = 0
    :param dump_path: (Optional) snapshot file receiving the last good state when the run aborts
    :param raise_on_failure: re-raise positivity and NaN failures after recording them
    :return: Trajectory
    """
    solver = NsfSolver(config)
    state = _initial_state(config, initial)
    primitive = solver.primitive(state)
    data_bounds = DataBounds.from_primitive(primitive)
    config.check_floors(float(np.min(primitive.rho)), float(np.min(primitive.theta)))
    trajectory = Trajectory(config, data_bounds)
    Logger.info(f'NSF run: {config.grid.cells} cells, t_end = {config.t_end}, {config.scaling}', TAG)

    damping = 0.0

    def record(current: FluidState, theta: np.ndarray):
        _, sigma_total = solver.entropy_production(current)
        row = {
            't': current.time,
            'mass': integral(current.rho, config.grid),
            'etot': integral(current.etot, config.grid),
            'damping_integral': damping,
            'sigma_integral': sigma_total,
            'min_rho': float(np.min(current.rho)),
            'min_theta': float(np.min(theta)),
            'floor_hits': solver.floor_hits,
        }
        trajectory.add(current, theta, row)
        Logger.debug(f"output t = {current.time:.6g}, etot = {row['etot']:.15g}", TAG)

    record(state, primitive.theta)
    steps = 0
    power = _damping_power(config, state)
    try:
        while state.time < config.t_end:
            remaining = config.t_end - state.time
            dt = solver.stable_dt(state)
            last = dt >= remaining * (1.0 - END_SLACK)
            dt = min(dt, remaining)
            advanced = solver.step(state, dt)
            if last:
                advanced = advanced.with_fields(time=config.t_end)
            if not advanced.is_finite():
                raise NumericalError("non-finite state", time=advanced.time)
            theta = solver.primitive(advanced).theta
            next_power = _damping_power(config, advanced)
            damping += 0.5 * dt * (power + next_power)
            power = next_power
            state = advanced
            steps += 1
            if last or steps % config.output_stride == 0:
                record(state, theta)
    except LabException as e:
        trajectory.healthy = False
        trajectory.failure = str(e)
        trajectory.dump = state
        Logger.error(f'NSF run aborted at t = {state.time}: {e}', TAG)
        if dump_path:
            write_snapshot(dump_path, config.grid, state.time, state.fields(), {'failure': type(e).__name__})
        if raise_on_failure:
            raise
        return trajectory

    trajectory.healthy = solver.healthy
    if not solver.healthy:
        trajectory.failure = f'{solver.floor_hits} floor activations'
    Logger.info(f'NSF run finished after {steps} steps, healthy = {trajectory.healthy}', TAG)
    return trajectory
