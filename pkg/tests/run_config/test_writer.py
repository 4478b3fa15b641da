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

import json
import shutil
import tempfile
import unittest
from os import path

import numpy as np

from nsflab.grid_fields.grid import Grid, SLIP
from nsflab.grid_fields.snapshot import read_snapshot
from run_config.writer import FileWriter, format_value


class TestFileWriter(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.root = path.join(self.directory, 'out')
        self.writer = FileWriter(self.root)

    def tearDown(self):
        shutil.rmtree(self.directory)

    def read(self, relative_path: str) -> str:
        with open(path.join(self.root, relative_path)) as f:
            return f.read()

    def test_format_value(self):
        self.assertEqual(format_value(0.1), '0.1')
        self.assertEqual(format_value(1.0 / 3.0), repr(1.0 / 3.0))
        self.assertEqual(format_value(3), '3')
        self.assertEqual(format_value(True), 'True')

    def test_csv(self):
        self.writer.write_csv('runs/p00/solver.csv', ['t', 'mass'], [[0.0, 1.0], [0.1, 1.0 / 3.0]])
        self.assertEqual(self.read('runs/p00/solver.csv'), f't,mass\n0.0,1.0\n0.1,{1.0 / 3.0!r}\n')

    def test_plot_data(self):
        self.writer.write_plot_data('plot.dat', ['a', 'E_sup'], [[1e-2, 0.5], [1e-3, 0.25]])
        lines = self.read('plot.dat').splitlines()
        self.assertEqual(lines, ['# a E_sup', '0.01 0.5', '0.001 0.25'])

    def test_summary(self):
        self.writer.write_summary('summary.txt', {'healthy': True, 'bounds': {'kinetic': 0.5, 'damping': 2.0},
                                                  'failure': None})
        self.assertEqual(self.read('summary.txt'),
                         'healthy = True\nbounds.kinetic = 0.5\nbounds.damping = 2.0\nfailure = None\n')

    def test_manifest(self):
        self.writer.write_manifest('manifest.json', {'version': 1, 'points': [], 'fit': None})
        text = self.read('manifest.json')
        self.assertEqual(json.loads(text), {'version': 1, 'points': [], 'fit': None})
        self.assertLess(text.index('"fit"'), text.index('"points"'))

    def test_snapshot(self):
        grid = Grid((1.0,), (8,), (SLIP,))
        rho = np.linspace(1.0, 2.0, 8)
        target = self.writer.write_snapshot('snapshots/0000.snap', grid, 0.25, {'rho': rho}, {'run': 'p00'})
        snapshot = read_snapshot(target)
        self.assertEqual(snapshot.grid, grid)
        self.assertEqual(snapshot.time, 0.25)
        np.testing.assert_array_equal(snapshot.fields['rho'], rho)
        self.assertEqual(snapshot.meta, {'run': 'p00'})

    def test_clean(self):
        self.assertFalse(self.writer.clean())
        self.writer.write_plot_data('plot.dat', ['a'], [[1.0]])
        self.assertTrue(self.writer.clean())
        self.assertFalse(path.isdir(self.root))
