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

from ..utility.reduction import tree_sum, tree_max
from ..utility.utils import require
from .grid import Grid

NORM_ORDERS = (2, 4, 6, np.inf)


def _magnitude(values, grid: Grid) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if values.ndim == grid.dim + 1:
        return np.sqrt(np.sum(values ** 2, axis=0))
    require(values.shape == grid.shape, "field shape does not match the grid")
    return np.abs(values)


def integral(values, grid: Grid) -> float:
    """Midpoint rule over the cells"""
    values = np.asarray(values, dtype=float)
    require(values.shape[-grid.dim:] == grid.shape, "field shape does not match the grid")
    return tree_sum(values) * grid.cell_volume


def inner_product(f, g, grid: Grid) -> float:
    product = np.asarray(f, dtype=float) * np.asarray(g, dtype=float)
    if product.ndim == grid.dim + 1:
        product = np.sum(product, axis=0)
    return integral(product, grid)


def lp_norm(values, grid: Grid, p=2) -> float:
    """
    Cell-volume weighted L^p norm; vector fields are measured by their pointwise length

    :param p: 2, 4, 6 or numpy.inf
    """
    require(p in NORM_ORDERS, f"p should be one of {NORM_ORDERS}")
    magnitude = _magnitude(values, grid)
    if p == np.inf:
        return tree_max(magnitude) if magnitude.size else 0.0
    return (tree_sum(magnitude ** p) * grid.cell_volume) ** (1.0 / p)


class TimeIntegral:
    """
    Trapezoid accumulator of a scalar time series given at output instants.
    """

    def __init__(self):
        self.times = []
        self.values = []
        self.cumulative = []

    def add(self, t: float, value: float) -> float:
        if self.times:
            require(t >= self.times[-1], "instants should be non-decreasing")
            area = 0.5 * (t - self.times[-1]) * (value + self.values[-1])
            self.cumulative.append(self.cumulative[-1] + area)
        else:
            self.cumulative.append(0.0)
        self.times.append(float(t))
        self.values.append(float(value))
        return self.cumulative[-1]

    @property
    def value(self) -> float:
        return self.cumulative[-1] if self.cumulative else 0.0


def trapezoid_cumulative(times, values) -> np.ndarray:
    accumulator = TimeIntegral()
    for t, value in zip(times, values):
        accumulator.add(t, value)
    return np.asarray(accumulator.cumulative)
