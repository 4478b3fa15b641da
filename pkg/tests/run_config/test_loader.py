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

import shutil
import tempfile
import unittest
from os import path

from nsflab.grid_fields.grid import Grid, PERIODIC, SLIP
from nsflab.utility.exceptions import ConfigError
from run_config.loader import RunConfig, load_config, parse_config_text
from run_config.schema import schema

CONFIG_DIR = path.join(path.dirname(path.abspath(__file__)), '..', '..', 'configs')


class TestParse(unittest.TestCase):

    def test_typed_values(self):
        values = parse_config_text('''
            # comment line
            scaling.a = 1e-3   # trailing comment
            grid.cells = 64 32
            grid.bc = periodic slip
            path.a_values = 1e-2 1e-3
            output.stride = 5
        ''')
        self.assertEqual(values['scaling.a'], 1e-3)
        self.assertEqual(values['grid.cells'], [64, 32])
        self.assertEqual(values['grid.bc'], ['periodic', 'slip'])
        self.assertEqual(values['path.a_values'], [1e-2, 1e-3])
        self.assertEqual(values['output.stride'], 5)
        self.assertEqual(len(values), 5)

    def test_malformed_line(self):
        with self.assertRaises(ConfigError) as context:
            parse_config_text('scaling.a = 1e-3\nscaling.nu 0.1')
        self.assertEqual(context.exception.context['line'], 2)

    def test_unknown_key(self):
        self.assertRaises(ConfigError, parse_config_text, 'scaling.mu = 0.1')

    def test_duplicate_key(self):
        self.assertRaises(ConfigError, parse_config_text, 't_end = 0.1\nt_end = 0.2')

    def test_bad_value(self):
        self.assertRaises(ConfigError, parse_config_text, 'output.stride = 2.5')
        self.assertRaises(ConfigError, parse_config_text, 'grid.extents = 1.0 wide')


class TestRunConfig(unittest.TestCase):

    def test_defaults(self):
        config = RunConfig({})
        for key, (_, default, _) in schema.items():
            self.assertEqual(config[key], default)
        self.assertRaises(ConfigError, config.__getitem__, 'scaling.mu')

    def test_default_builders(self):
        settings = RunConfig({}).sweep_settings()
        self.assertEqual(settings.run.grid, Grid((1.0,), (128,), (SLIP,)))
        self.assertEqual(settings.path.a_values, (1e-2, 1e-3, 1e-4))
        self.assertEqual(settings.scenario.name, 'slab')
        self.assertIsNone(settings.cache_dir)
        self.assertEqual(settings.window.margin, 0.25)
        self.assertTrue(settings.path.validate().valid)

    def test_per_axis_values(self):
        config = RunConfig(parse_config_text('grid.dim = 2\ngrid.extents = 1.0 2.0\ngrid.cells = 16\n'
                                             'grid.bc = periodic slip'))
        self.assertEqual(config.grid(), Grid((1.0, 2.0), (16, 16), (PERIODIC, SLIP)))
        wrong = config.with_overrides(grid_cells=[16, 16, 16])
        self.assertRaises(ConfigError, wrong.grid)

    def test_library_errors_become_config_errors(self):
        self.assertRaises(ConfigError, RunConfig({'grid.cells': [4]}).grid)
        self.assertRaises(ConfigError, RunConfig({'gas.name': 'vacuum'}).gas)
        self.assertRaises(ConfigError, RunConfig({'gas.name': 'expression'}).gas)
        self.assertRaises(ConfigError, RunConfig({'scaling.a': -1.0}).scaling)
        self.assertRaises(ConfigError, RunConfig({'path.a_values': [1e-3, 1e-2]}).path)
        self.assertRaises(ConfigError, RunConfig({'scenario.name': 'vortex'}).scenario)
        self.assertRaises(ConfigError, RunConfig({'cfl': 2.0}).nsf_run)
        self.assertRaises(ConfigError, RunConfig({'coercivity.rho_range': [0.5]}).coercivity_rectangle)
        self.assertRaises(ConfigError, RunConfig({'coercivity.rho_range': [2.0, 0.5]}).window)

    def test_overrides(self):
        config = RunConfig({}).with_overrides(scaling_a=1e-3, t_end=0.5, output_stride=3)
        self.assertEqual(config['scaling.a'], 1e-3)
        self.assertEqual(config['t_end'], 0.5)
        self.assertEqual(config.nsf_run().output_stride, 3)
        self.assertRaises(ConfigError, RunConfig({}).with_overrides, scaling_mu=0.1)

    def test_lines_reload(self):
        config = RunConfig({'scaling.a': 1e-3, 'grid.cells': [64]})
        reloaded = RunConfig(parse_config_text('\n'.join(config.lines())))
        self.assertEqual(len(config.lines()), len(schema))
        for key in schema:
            self.assertEqual(reloaded[key], config[key])


class TestLoadConfig(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_shipped_configs(self):
        default = load_config(path.join(CONFIG_DIR, 'default.cfg'))
        self.assertEqual(default['grid.cells'], [128])
        self.assertEqual(default.scaling().a, 0.01)
        self.assertTrue(default.path().validate().valid)
        ill = load_config(path.join(CONFIG_DIR, 'ill_prepared.cfg'))
        self.assertEqual(ill.scenario().preparation, 'ill')

    def test_without_file(self):
        self.assertEqual(load_config().values, {})

    def test_missing_file(self):
        self.assertRaises(ConfigError, load_config, path.join(self.directory, 'missing.cfg'))

    def test_invalid_file(self):
        file_path = path.join(self.directory, 'bad.cfg')
        with open(file_path, 'w') as f:
            f.write('grid.cells = many\n')
        self.assertRaises(ConfigError, load_config, file_path)
