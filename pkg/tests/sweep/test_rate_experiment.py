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

import io
import shutil
import tempfile
import unittest
from contextlib import redirect_stdout
from os import path

from lab import main
from nsflab.diagnostics.envelope import rate_envelope
from nsflab.sweep.path import ScalingPath
from nsflab.sweep.sweep import load_manifest

CONFIG_DIR = path.join(path.dirname(path.abspath(__file__)), '..', '..', 'configs')
# ill-prepared data keep E_sup within this multiple of the initial relative energy
ILL_PREPARED_GROWTH = 3.0


class TestRateExperiment(unittest.TestCase):
    """Shipped sweep configurations, end to end through the command line"""

    @classmethod
    def setUpClass(cls):
        cls.directory = tempfile.mkdtemp()
        cls.cache = path.join(cls.directory, 'cache')

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.directory)

    def config_with_cache(self, name: str) -> str:
        with open(path.join(CONFIG_DIR, name)) as f:
            text = f.read()
        file_path = path.join(self.directory, name)
        with open(file_path, 'w') as f:
            f.write(text + f'\ncache.dir = {self.cache}\n')
        return file_path

    def run_main(self, *argv) -> tuple:
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            code = main(list(argv))
        return code, buffer.getvalue().splitlines()

    def sweep(self, name: str) -> str:
        out = path.join(self.directory, name.replace('.cfg', ''))
        code, lines = self.run_main('sweep', '--config', self.config_with_cache(name), '--out', out, '--threads', '3')
        self.assertEqual(code, 0, lines)
        return out

    def test_envelope_decreases_along_the_default_path(self):
        envelopes = [rate_envelope(scaling) for scaling in ScalingPath().points()]
        self.assertEqual(len(envelopes), 3)
        self.assertTrue(all(x > y for x, y in zip(envelopes, envelopes[1:])), envelopes)

    def test_well_prepared_sweep(self):
        out = self.sweep('default.cfg')
        manifest = load_manifest(path.join(out, 'manifest.json'))
        self.assertEqual(len(manifest.points), 3)
        self.assertTrue(all(point.healthy for point in manifest.points))
        e_sup = [point.E_sup for point in manifest.points]
        envelopes = [point.envelope for point in manifest.points]
        self.assertTrue(all(x > y for x, y in zip(e_sup, e_sup[1:])), e_sup)
        self.assertTrue(all(x > y for x, y in zip(envelopes, envelopes[1:])), envelopes)
        self.assertFalse(manifest.fit['flagged'])

        code, lines = self.run_main('rate-fit', '--out', out)
        self.assertEqual(code, 0)
        self.assertEqual(len(lines), 4)
        self.assertTrue(lines[-1].endswith('flagged = False'))
        self.assertTrue(path.isfile(path.join(out, 'rate_fit.txt')))

    def test_ill_prepared_sweep(self):
        manifest = load_manifest(path.join(self.sweep('ill_prepared.cfg'), 'manifest.json'))
        self.assertEqual(manifest.preparation, 'ill')
        for point in manifest.points:
            self.assertTrue(point.healthy, point.failure)
            self.assertGreater(point.E_init, 0.0)
            self.assertLessEqual(point.E_sup, ILL_PREPARED_GROWTH * point.E_init)
