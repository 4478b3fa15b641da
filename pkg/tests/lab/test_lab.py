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


class TestLab(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.out = path.join(self.directory, 'out')

    def tearDown(self):
        shutil.rmtree(self.directory)

    def run_main(self, *argv) -> tuple:
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            code = main(list(argv) + ['--out', self.out])
        return code, buffer.getvalue().splitlines()

    def write_config(self, text: str) -> str:
        file_path = path.join(self.directory, 'run.cfg')
        with open(file_path, 'w') as f:
            f.write(text)
        return file_path

    def test_clean(self):
        code, lines = self.run_main('clean')
        self.assertEqual(code, 0)
        self.assertEqual(lines, ['No exist output directory'])

    def test_thermo_check(self):
        code, lines = self.run_main('thermo-check')
        self.assertEqual(code, 0)
        self.assertTrue(any(line.startswith('H7 FAIL') for line in lines))
        self.assertTrue(path.isfile(path.join(self.out, 'thermo_check.txt')))

        code, lines = self.run_main('clean')
        self.assertEqual(lines, ['Removed output directory successfully'])

    def test_coercivity(self):
        config = self.write_config('coercivity.samples = 256\n')
        code, lines = self.run_main('coercivity', '--config', config, '--seed', '3')
        self.assertEqual(code, 0)
        self.assertTrue(lines[-1].startswith('c(K) = '))
        self.assertTrue(path.isfile(path.join(self.out, 'coercivity.txt')))

    def test_errors_exit_with_one(self):
        config = self.write_config('scaling.mu = 0.1\n')
        code, lines = self.run_main('thermo-check', '--config', config)
        self.assertEqual(code, 1)
        self.assertTrue(lines[-1].startswith('ConfigError: '))

        code, lines = self.run_main('rate-fit')
        self.assertEqual(code, 1)
        self.assertTrue(lines[-1].startswith('ConfigError: cannot read manifest'))
