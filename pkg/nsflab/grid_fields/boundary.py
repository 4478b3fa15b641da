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
Ghost cells.

Periodic axes wrap. Slip-wall axes mirror the first interior layers across
the wall: scalars and tangential velocity evenly, the wall-normal velocity
oddly, so u.n vanishes on the wall face and every centered normal
derivative of an even field (q.n, tangential traction) vanishes there too.
"""

import numpy as np

from ..utility.exceptions import UsageError
from ..utility.utils import require
from .grid import Grid, NG, PERIODIC, SLIP


class GhostedField:
    """
    Array with NG ghost layers on every spatial axis.

    data has shape (*components, *ghosted_shape); `components` is () for a
    scalar and (d,) for a vector whose component i is normal to axis i.
    """

    def __init__(self, data: np.ndarray, grid: Grid, vector: bool):
        self.data = data
        self.grid = grid
        self.vector = vector

    @property
    def leading(self) -> int:
        return 1 if self.vector else 0

    @property
    def interior(self) -> np.ndarray:
        return self.data[self.grid.interior(self.leading)]

    def shifted(self, axis: int, offset: int, pad: int = 0) -> np.ndarray:
        """
        View of the data moved by `offset` cells along `axis`, cut to the interior
        on every axis except `axis`, where `pad` extra layers are kept on both sides.
        """
        index = [slice(None)] * self.leading
        for k, n in enumerate(self.grid.cells):
            if k == axis:
                index.append(slice(NG - pad + offset, NG + n + pad + offset))
            else:
                index.append(slice(NG, NG + n))
        return self.data[tuple(index)]


def _pad_axis(data: np.ndarray, axis: int, kind: str, odd: bool) -> np.ndarray:
    widths = [(0, 0)] * data.ndim
    widths[axis] = (NG, NG)
    if kind == PERIODIC:
        return np.pad(data, widths, mode='wrap')
    padded = np.pad(data, widths, mode='symmetric')
    if odd:
        n = data.shape[axis]
        lower = [slice(None)] * data.ndim
        upper = [slice(None)] * data.ndim
        lower[axis] = slice(0, NG)
        upper[axis] = slice(NG + n, NG + n + NG)
        padded[tuple(lower)] *= -1.0
        padded[tuple(upper)] *= -1.0
    return padded


def _interior_of(field, grid: Grid, vector: bool) -> np.ndarray:
    if isinstance(field, GhostedField):
        grid.require_same(field.grid, 'ghosted field and grid')
        return field.interior
    return np.asarray(field, dtype=float)


def fill_ghosts(field, grid: Grid, vector: bool = None) -> GhostedField:
    """
    Fills the ghost layers of a scalar or vector field.

    :param field: interior array of shape grid.shape (scalar) or (d, *grid.shape) (vector), or a GhostedField
    :param grid: Grid
    :param vector: (Optional) forces the interpretation; inferred from the shape by default
    :return: GhostedField
    """
    if vector is None:
        vector = field.vector if isinstance(field, GhostedField) else np.ndim(field) == grid.dim + 1
    values = _interior_of(field, grid, vector)
    expected = ((grid.dim,) if vector else ()) + grid.shape
    require(values.shape == expected, f"field shape {values.shape} does not match {expected}")

    if not vector:
        data = values
        for axis, kind in enumerate(grid.bc):
            data = _pad_axis(data, axis, kind, odd=False)
        return GhostedField(data, grid, vector=False)

    components = []
    for component in range(grid.dim):
        data = values[component]
        for axis, kind in enumerate(grid.bc):
            data = _pad_axis(data, axis, kind, odd=(axis == component))
        components.append(data)
    return GhostedField(np.stack(components), grid, vector=True)


def fill_ghosts_slip(field, grid: Grid, vector: bool = None) -> GhostedField:
    """Ghost filling for a grid with at least one slip-wall axis"""
    require(len(grid.slip_axes) > 0, "grid has no slip-wall axis")
    return fill_ghosts(field, grid, vector)


def require_ghosted(field, what: str = 'field') -> GhostedField:
    if not isinstance(field, GhostedField):
        raise UsageError(f"{what} has no filled ghost cells, call fill_ghosts first")
    if what == 'vector field' and not field.vector:
        raise UsageError("a vector field is required")
    return field


def wall_face_values(field: GhostedField, axis: int) -> tuple:
    """Face averages on the lower and upper wall of a slip axis"""
    require(field.grid.bc[axis] == SLIP, "axis is not a slip wall")
    lower = 0.5 * (field.shifted(axis, -1) + field.shifted(axis, 0))
    upper = 0.5 * (field.shifted(axis, 0) + field.shifted(axis, 1))
    index = [slice(None)] * lower.ndim
    index[field.leading + axis] = 0
    first = lower[tuple(index)]
    index[field.leading + axis] = -1
    return first, upper[tuple(index)]
