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

import hashlib
from dataclasses import dataclass

import numpy as np

from ..utility.exceptions import UsageError
from ..utility.utils import require

PERIODIC = 'periodic'
SLIP = 'slip'
BOUNDARY_KINDS = (PERIODIC, SLIP)

# ghost layers on every side; the 6th order Euler filter needs three
NG = 3
MIN_CELLS = 8


@dataclass(frozen=True)
class Grid:
    """
    Uniform cell-centered grid of a 1-D slab or a 2-D rectangle [0, L_x] x [0, L_y].

    bc holds one boundary kind per axis: 'periodic' or 'slip' (slip walls on both ends).
    """
    extents: tuple
    cells: tuple
    bc: tuple

    def __post_init__(self):
        object.__setattr__(self, 'extents', tuple(float(e) for e in self.extents))
        object.__setattr__(self, 'cells', tuple(int(n) for n in self.cells))
        object.__setattr__(self, 'bc', tuple(str(b) for b in self.bc))
        require(len(self.extents) in (1, 2), "grid dimension should be 1 or 2")
        require(len(self.cells) == len(self.extents) == len(self.bc),
                "extents, cells and bc should have one entry per axis")
        require(all(e > 0 for e in self.extents), "extents should be greater than 0")
        require(all(n >= MIN_CELLS for n in self.cells), f"at least {MIN_CELLS} cells per axis are required")
        require(all(b in BOUNDARY_KINDS for b in self.bc), f"bc should be one of {BOUNDARY_KINDS}")

    @property
    def dim(self) -> int:
        return len(self.cells)

    @property
    def shape(self) -> tuple:
        return self.cells

    @property
    def ghosted_shape(self) -> tuple:
        return tuple(n + 2 * NG for n in self.cells)

    @property
    def spacing(self) -> tuple:
        return tuple(e / n for e, n in zip(self.extents, self.cells))

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    @property
    def volume(self) -> float:
        return float(np.prod(self.extents))

    @property
    def slip_axes(self) -> tuple:
        return tuple(axis for axis, kind in enumerate(self.bc) if kind == SLIP)

    @property
    def cell_count(self) -> int:
        return int(np.prod(self.cells))

    def centers(self, axis: int) -> np.ndarray:
        h = self.spacing[axis]
        return (np.arange(self.cells[axis]) + 0.5) * h

    def faces(self, axis: int) -> np.ndarray:
        return np.arange(self.cells[axis] + 1) * self.spacing[axis]

    def mesh(self) -> tuple:
        """Cell-center coordinates, one array of grid shape per axis"""
        return tuple(np.meshgrid(*(self.centers(axis) for axis in range(self.dim)), indexing='ij'))

    def face_mesh(self, axis: int) -> tuple:
        """Coordinates of the faces normal to axis"""
        coordinates = [self.centers(k) for k in range(self.dim)]
        coordinates[axis] = self.faces(axis)
        return tuple(np.meshgrid(*coordinates, indexing='ij'))

    def interior(self, leading: int = 0) -> tuple:
        """Slices of the interior cells in a ghosted array with `leading` component axes"""
        return (slice(None),) * leading + tuple(slice(NG, NG + n) for n in self.cells)

    def refined(self, factor: int) -> 'Grid':
        require(int(factor) >= 1, "refinement factor should be at least 1")
        return Grid(self.extents, tuple(n * int(factor) for n in self.cells), self.bc)

    def require_same(self, other: 'Grid', what: str = 'fields'):
        if self != other:
            raise UsageError(f"{what} live on different grids", left=self.signature(), right=other.signature())

    def signature(self) -> str:
        text = f'extents={self.extents};cells={self.cells};bc={self.bc}'
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def header(self) -> dict:
        return {
            'dim': str(self.dim),
            'extents': ' '.join(repr(e) for e in self.extents),
            'cells': ' '.join(str(n) for n in self.cells),
            'bc': ' '.join(self.bc),
        }

    @classmethod
    def from_header(cls, header: dict) -> 'Grid':
        return cls(tuple(float(e) for e in header['extents'].split()),
                   tuple(int(n) for n in header['cells'].split()),
                   tuple(header['bc'].split()))
