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
Field snapshot format.

A snapshot is a text header of `key = value` lines closed by a line
`end_header`, followed by the fields as flat little-endian float64 arrays in
C order, one after the other, in the order listed by the `fields` key:

    nsflab-snapshot 1
    dim = 1
    extents = 1.0
    cells = 64
    bc = slip
    time = 0.125
    fields = rho mom0 etot
    end_header
    <binary>
"""

from collections import namedtuple
from os import path, makedirs

import numpy as np

from ..utility.exceptions import UsageError
from ..utility.utils import require
from .grid import Grid

MAGIC = 'nsflab-snapshot 1'
END = 'end_header'
DTYPE = np.dtype('<f8')

Snapshot = namedtuple('Snapshot', 'grid time fields meta')


def encode_snapshot(grid: Grid, time: float, fields: dict, meta: dict = None) -> bytes:
    """
    :param grid: Grid
    :param time: snapshot time
    :param fields: name -> array of grid shape; names must not contain spaces
    :param meta: (Optional) extra header entries
    :return: bytes
    """
    lines = [MAGIC]
    header = dict(grid.header())
    header['time'] = repr(float(time))
    header['fields'] = ' '.join(fields)
    for key, value in (meta or {}).items():
        require(key not in header and '=' not in str(key), f"reserved header key '{key}'")
        header[key] = str(value)
    lines.extend(f'{key} = {value}' for key, value in header.items())
    lines.append(END)
    for name, values in fields.items():
        require(np.shape(values) == grid.shape, f"field '{name}' does not have the grid shape")
    payload = b''.join(np.ascontiguousarray(fields[name], dtype=DTYPE).tobytes() for name in fields)
    return ('\n'.join(lines) + '\n').encode('ascii') + payload


def decode_snapshot(data: bytes) -> Snapshot:
    marker = ('\n' + END + '\n').encode('ascii')
    position = data.find(marker)
    if not data.startswith(MAGIC.encode('ascii')) or position < 0:
        raise UsageError("not a snapshot")
    header = {}
    for line in data[:position].decode('ascii').splitlines()[1:]:
        key, _, value = line.partition('=')
        header[key.strip()] = value.strip()
    grid = Grid.from_header(header)
    names = header['fields'].split()
    body = np.frombuffer(data[position + len(marker):], dtype=DTYPE)
    require(body.size == len(names) * grid.cell_count, "snapshot body does not match its header")
    fields = {name: body[k * grid.cell_count:(k + 1) * grid.cell_count].reshape(grid.shape).copy()
              for k, name in enumerate(names)}
    meta = {key: value for key, value in header.items()
            if key not in ('dim', 'extents', 'cells', 'bc', 'time', 'fields')}
    return Snapshot(grid, float(header['time']), fields, meta)


def write_snapshot(file_path: str, grid: Grid, time: float, fields: dict, meta: dict = None) -> None:
    directory = path.dirname(file_path)
    if directory:
        makedirs(directory, exist_ok=True)
    with open(file_path, 'wb') as f:
        f.write(encode_snapshot(grid, time, fields, meta))


def read_snapshot(file_path: str) -> Snapshot:
    with open(file_path, 'rb') as f:
        return decode_snapshot(f.read())


def profile_rows(grid: Grid, fields: dict) -> tuple:
    """
    Columns of a 1-D profile table: x followed by the fields

    :return: (header, rows)
    """
    require(grid.dim == 1, "profiles are exported for 1-D grids only")
    header = ['x'] + list(fields)
    columns = [grid.centers(0)] + [np.asarray(fields[name]) for name in fields]
    return header, [list(row) for row in zip(*columns)]
