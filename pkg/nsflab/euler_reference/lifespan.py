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

from collections import namedtuple

import numpy as np

from ..grid_fields.boundary import fill_ghosts
from ..grid_fields.calculus import gradient
from ..utility.logger import Logger

TAG = 'Lifespan'

GROWTH_FACTOR = 20.0
SAFETY = 0.8
FIT_POINTS = 5
# a fitted blow-up this close to the last snapshot, relative to the elapsed time, counts as reached
IMMINENCE = 0.1
MIN_FIT_GROWTH = 2.0

LifespanReport = namedtuple('LifespanReport',
                            'smooth t_star t_safe reason times grad_u grad_rho fitted_t_star')


def gradient_history(trajectory) -> tuple:
    """max |grad u| and max |grad rho| at every snapshot"""
    grid = trajectory.grid
    grad_u, grad_rho = [], []
    for index in range(len(trajectory.states)):
        primitive = trajectory.primitive(index)
        grad_u.append(float(np.max(np.abs(gradient(fill_ghosts(primitive.u, grid, vector=True))))))
        grad_rho.append(float(np.max(np.abs(gradient(fill_ghosts(primitive.rho, grid))))))
    return np.array(grad_u), np.array(grad_rho)


def _exceedance(times, series, growth_factor):
    initial = series[0]
    if not initial > 0:
        return None
    above = np.flatnonzero(series > growth_factor * initial)
    return float(times[above[0]]) if above.size else None


def _fitted_blow_up(times, series):
    """Blow-up time of a 1/(T* - t) envelope fitted to the last snapshots, or None"""
    if len(series) < FIT_POINTS or not series[0] > 0 or series[-1] < MIN_FIT_GROWTH * series[0]:
        return None
    t, g = times[-FIT_POINTS:], series[-FIT_POINTS:]
    if not np.all(g > 0):
        return None
    slope, intercept = np.polyfit(t, 1.0 / g, 1)
    if not slope < 0:
        return None
    return float(-intercept / slope)


def lifespan_monitor(trajectory, t_end: float = None, growth_factor: float = GROWTH_FACTOR,
                     safety: float = SAFETY) -> LifespanReport:
    """
    Estimates where the computed Euler solution stops being smooth.

    Life span is declared exhausted when max |grad u| or max |grad rho| grows
    beyond growth_factor times its initial value, when a 1/(T* - t) envelope
    fitted to the latest snapshots predicts blow-up right after them, or when
    the run itself terminated on a positivity loss.

    :param trajectory: EulerTrajectory
    :param t_end: (Optional) intended final time, the last snapshot time by default
    :return: LifespanReport; t_safe = safety T* or t_end when smooth
    """
    times = trajectory.times
    t_end = float(times[-1]) if t_end is None else float(t_end)
    grad_u, grad_rho = gradient_history(trajectory)

    candidates = []
    for name, series in (('grad u', grad_u), ('grad rho', grad_rho)):
        crossing = _exceedance(times, series, growth_factor)
        if crossing is not None:
            candidates.append((crossing, f'max |{name}| grew beyond {growth_factor:g}x'))
    fitted = [f for f in (_fitted_blow_up(times, grad_u), _fitted_blow_up(times, grad_rho)) if f is not None]
    fitted_t_star = min(fitted) if fitted else None
    elapsed = times[-1] - times[0]
    if fitted_t_star is not None and fitted_t_star - times[-1] <= IMMINENCE * elapsed:
        candidates.append((max(fitted_t_star, float(times[0])), 'fitted 1/(T* - t) growth'))
    if trajectory.terminated_at is not None:
        candidates.append((float(trajectory.terminated_at), f'run terminated: {trajectory.failure}'))

    if not candidates:
        return LifespanReport(True, None, t_end, 'smooth through t_end', times, grad_u, grad_rho, fitted_t_star)
    t_star, reason = min(candidates, key=lambda c: c[0])
    Logger.info(f'life span exhausted at T* = {t_star:.6g} ({reason})', TAG)
    return LifespanReport(False, t_star, safety * t_star, reason, times, grad_u, grad_rho, fitted_t_star)
