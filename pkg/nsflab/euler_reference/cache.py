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
On-disk cache of Euler reference trajectories.

Entries are numpy .npz archives named by the sha256 of everything that
determines the run: initial data, grid, gas model and solver settings.
"""

import hashlib
import json
from os import path, makedirs

import numpy as np

from ..grid_fields.fields import FluidState
from ..utility.logger import Logger
from .euler_solver import EulerTrajectory

TAG = 'ReferenceCache'


def reference_key(initial, grid, gas, **settings) -> str:
    text = json.dumps({
        'initial': initial.fingerprint(),
        'grid': grid.header(),
        'gas': repr(gas),
        'settings': {key: repr(value) for key, value in sorted(settings.items())},
    }, sort_keys=True)
    return hashlib.sha256(text.encode()).hexdigest()


class ReferenceCache:

    def __init__(self, cache_dir: str):
        self.cache_dir = cache_dir

    def _file(self, key: str) -> str:
        return path.join(self.cache_dir, f'{key}.npz')

    def load(self, key: str, grid, gas):
        file_path = self._file(key)
        if not path.isfile(file_path):
            return None
        with np.load(file_path) as archive:
            meta = json.loads(str(archive['meta']))
            trajectory = EulerTrajectory(grid, gas, meta['dt'], meta['filter_amplitude'])
            trajectory.terminated_at = meta['terminated_at']
            trajectory.failure = meta['failure']
            for index, t in enumerate(archive['times']):
                trajectory.states.append(FluidState(grid, archive['rho'][index], archive['mom'][index],
                                                    archive['etot'][index], float(t)))
        Logger.debug(f'reference trajectory {key[:12]} loaded from cache', TAG)
        return trajectory

    def store(self, key: str, trajectory: EulerTrajectory) -> str:
        makedirs(self.cache_dir, exist_ok=True)
        meta = {'dt': trajectory.dt, 'filter_amplitude': trajectory.filter_amplitude,
                'terminated_at': trajectory.terminated_at, 'failure': trajectory.failure}
        file_path = self._file(key)
        np.savez(file_path,
                 times=trajectory.times,
                 rho=np.stack([s.rho for s in trajectory.states]),
                 mom=np.stack([s.mom for s in trajectory.states]),
                 etot=np.stack([s.etot for s in trajectory.states]),
                 meta=np.array(json.dumps(meta)))
        return file_path
