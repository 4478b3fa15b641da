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
Second order centered calculus on ghosted fields.

Cell operators return interior arrays. Face operators along `axis` return
arrays with cells[axis] + 1 entries on that axis (face k sits between cells
k - 1 and k), cut to the interior on every other axis.
"""

import numpy as np

from .boundary import GhostedField, require_ghosted
from .grid import Grid, NG


def window(field: GhostedField, offsets: dict, extents: dict = None) -> np.ndarray:
    """
    Slices the ghosted data: along axis k the interior moved by offsets[k],
    lengthened by extents[k] cells at the upper end.
    """
    extents = extents or {}
    index = [slice(None)] * field.leading
    for k, n in enumerate(field.grid.cells):
        start = NG + offsets.get(k, 0)
        index.append(slice(start, start + n + extents.get(k, 0)))
    return field.data[tuple(index)]


def _centered(field: GhostedField, direction: int, base: dict = None, extents: dict = None) -> np.ndarray:
    base = base or {}
    plus = dict(base)
    minus = dict(base)
    plus[direction] = base.get(direction, 0) + 1
    minus[direction] = base.get(direction, 0) - 1
    h = field.grid.spacing[direction]
    return (window(field, plus, extents) - window(field, minus, extents)) / (2.0 * h)


def partial(field, axis: int) -> np.ndarray:
    """Centered derivative along axis at cell centers"""
    return _centered(require_ghosted(field), axis)


def gradient(field) -> np.ndarray:
    """
    Cell-centered gradient.

    :param field: scalar or vector GhostedField
    :return: (d, *cells) for a scalar, (d, d, *cells) with [i, j] = d_j f_i for a vector
    """
    field = require_ghosted(field)
    derivatives = [_centered(field, axis) for axis in range(field.grid.dim)]
    return np.stack(derivatives, axis=1 if field.vector else 0)


def divergence(field) -> np.ndarray:
    field = require_ghosted(field, 'vector field')
    return sum(_centered(field, axis)[axis] for axis in range(field.grid.dim))


def _face_neighbours(field: GhostedField, axis: int) -> tuple:
    """Cells k - 1 and k for every face k = 0 .. n along axis"""
    return (window(field, {axis: -1}, {axis: 1}), window(field, {axis: 0}, {axis: 1}))


def face_difference(field, axis: int) -> np.ndarray:
    """(f_k - f_{k-1}) / h on the faces normal to axis"""
    field = require_ghosted(field)
    left, right = _face_neighbours(field, axis)
    return (right - left) / field.grid.spacing[axis]


def face_average(field, axis: int) -> np.ndarray:
    field = require_ghosted(field)
    left, right = _face_neighbours(field, axis)
    return 0.5 * (left + right)


def face_tangential_derivative(field, axis: int, direction: int) -> np.ndarray:
    """
    Derivative along `direction` != axis on the faces normal to axis: the
    average of the centered derivatives of the two adjacent cells.
    """
    field = require_ghosted(field)
    left = _centered(field, direction, {axis: -1}, {axis: 1})
    right = _centered(field, direction, {axis: 0}, {axis: 1})
    return 0.5 * (left + right)


def face_gradient(field, axis: int) -> np.ndarray:
    """
    Full gradient on the faces normal to axis: normal difference plus averaged
    tangential derivatives. Shape (d, *faces) for scalars, (d, d, *faces) for vectors.
    """
    field = require_ghosted(field)
    parts = []
    for direction in range(field.grid.dim):
        if direction == axis:
            parts.append(face_difference(field, axis))
        else:
            parts.append(face_tangential_derivative(field, axis, direction))
    return np.stack(parts, axis=1 if field.vector else 0)


def flux_divergence(face_flux: np.ndarray, grid: Grid, axis: int, leading: int = 0) -> np.ndarray:
    """(F_{k+1/2} - F_{k-1/2}) / h for face fluxes along axis"""
    upper = [slice(None)] * face_flux.ndim
    lower = [slice(None)] * face_flux.ndim
    upper[leading + axis] = slice(1, None)
    lower[leading + axis] = slice(0, -1)
    return (face_flux[tuple(upper)] - face_flux[tuple(lower)]) / grid.spacing[axis]


def laplacian(field) -> np.ndarray:
    """Viscous-type operator div(grad f) by differencing face fluxes"""
    field = require_ghosted(field)
    return sum(flux_divergence(face_difference(field, axis), field.grid, axis, field.leading)
               for axis in range(field.grid.dim))


def partial_fourth_order(field, axis: int) -> np.ndarray:
    """(-f_{i+2} + 8 f_{i+1} - 8 f_{i-1} + f_{i-2}) / (12 h) at cell centers"""
    field = require_ghosted(field)
    h = field.grid.spacing[axis]
    return (-window(field, {axis: 2}) + 8.0 * window(field, {axis: 1})
            - 8.0 * window(field, {axis: -1}) + window(field, {axis: -2})) / (12.0 * h)


def divergence_fourth_order(field) -> np.ndarray:
    field = require_ghosted(field, 'vector field')
    return sum(partial_fourth_order(field, axis)[axis] for axis in range(field.grid.dim))
