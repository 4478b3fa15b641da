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

from ..grid_fields.fields import FluidState, ReferenceFields
from ..grid_fields.grid import Grid
from ..nsf_solver.temperature import recover_temperature
from ..utility.exceptions import UsageError
from ..utility.utils import require

TIME_SLACK = 1e-12


def coarsening_factors(fine: Grid, coarse: Grid) -> tuple:
    require(fine.extents == coarse.extents and fine.bc == coarse.bc,
            "reference and target grids should cover the same box with the same boundaries")
    factors = []
    for n_fine, n_coarse in zip(fine.cells, coarse.cells):
        require(n_fine % n_coarse == 0, "reference grid should refine the target grid by an integer factor",
                fine=fine.cells, coarse=coarse.cells)
        factors.append(n_fine // n_coarse)
    return tuple(factors)


def block_average(values: np.ndarray, factors: tuple, leading: int = 0) -> np.ndarray:
    """Conservative averaging of blocks of factors[k] cells along every spatial axis"""
    shape = list(values.shape[:leading])
    axes = []
    for k, factor in enumerate(factors):
        n = values.shape[leading + k] // factor
        shape.extend([n, factor])
        axes.append(leading + 2 * k + 1)
    return values.reshape(shape).mean(axis=tuple(axes))


def _interpolated_state(trajectory, t: float) -> FluidState:
    times = trajectory.times
    span = max(abs(times[-1]), 1.0)
    if not (times[0] - TIME_SLACK * span <= t <= times[-1] + TIME_SLACK * span):
        raise UsageError("reference sampled outside its stored time range", t=t,
                         first=float(times[0]), last=float(times[-1]))
    upper = int(np.searchsorted(times, t, side='left'))
    if upper < len(times) and abs(times[upper] - t) <= TIME_SLACK * span:
        return trajectory.states[upper]
    if upper == 0:
        return trajectory.states[0]
    upper = min(upper, len(times) - 1)
    lower = upper - 1
    weight = (t - times[lower]) / (times[upper] - times[lower])
    first, second = trajectory.states[lower], trajectory.states[upper]
    return first.with_fields(rho=(1.0 - weight) * first.rho + weight * second.rho,
                             mom=(1.0 - weight) * first.mom + weight * second.mom,
                             etot=(1.0 - weight) * first.etot + weight * second.etot,
                             time=t)


def sample_reference(trajectory, t: float, target: Grid) -> ReferenceFields:
    """
    Reference trio at time t on the target grid: linear interpolation in time
    between stored snapshots, then block averages of the conservative fields.

    :param trajectory: EulerTrajectory
    :param t: time inside the stored range
    :param target: Grid coarsened from the reference grid by integer factors
    :return: ReferenceFields
    :raise UsageError: t outside the stored range
    """
    factors = coarsening_factors(trajectory.grid, target)
    state = _interpolated_state(trajectory, t)
    rho = block_average(state.rho, factors)
    mom = block_average(state.mom, factors, leading=1)
    etot = block_average(state.etot, factors)
    theta = recover_temperature(rho, mom, etot, trajectory.gas, 0.0)
    return ReferenceFields(target, rho, theta, mom / rho, float(t))


def sample_series(trajectory, times, target: Grid) -> list:
    return [sample_reference(trajectory, t, target) for t in times]
