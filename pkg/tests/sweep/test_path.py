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

import unittest

import numpy as np

from nsflab.grid_fields.grid import Grid, PERIODIC, SLIP
from nsflab.sweep.path import DEFAULT_A_VALUES, ScalingPath, validate_path
from nsflab.sweep.scenarios import PREPARATIONS, compression, ill_prepared, scenario_by_name, shear, slab
from nsflab.utility.exceptions import ConfigError, UsageError


class TestScalingPath(unittest.TestCase):

    def test_default_path_is_admissible(self):
        validation = validate_path(0.55, 1.2, 0.1)
        self.assertTrue(validation.valid)
        self.assertEqual(validation.violations, [])

    def test_alpha_outside_range(self):
        validation = validate_path(0.7, 1.2, 0.1)
        self.assertFalse(validation.valid)
        self.assertTrue(any(v.startswith('alpha') for v in validation.violations))

    def test_beta_not_above_one(self):
        validation = validate_path(0.55, 0.9, 0.1)
        self.assertFalse(validation.valid)
        self.assertTrue(any('omega/a does not decrease' in v for v in validation.violations))

    def test_gamma_too_large(self):
        validation = validate_path(0.55, 1.2, 0.2)
        self.assertFalse(validation.valid)
        self.assertTrue(any(v.startswith('gamma') for v in validation.violations))

    def test_points(self):
        path = ScalingPath()
        points = path.points()
        self.assertEqual(len(points), len(DEFAULT_A_VALUES))
        self.assertAlmostEqual(points[0].nu, 1e-2 ** 0.55)
        self.assertAlmostEqual(points[1].omega, 1e-3 ** 1.2)
        self.assertAlmostEqual(points[2].lam, 1e-4 ** 0.1)
        self.assertTrue(path.validate().valid)
        self.assertEqual(path.as_dict()['a_values'], [1e-2, 1e-3, 1e-4])

    def test_a_values_must_decrease(self):
        self.assertRaises(UsageError, ScalingPath, (1e-3, 1e-2))
        self.assertRaises(UsageError, ScalingPath, ())
        self.assertRaises(UsageError, ScalingPath, (1e-2, -1e-3))


class TestScenarios(unittest.TestCase):

    def test_slab_is_tangential_on_the_walls(self):
        grid = Grid((1.0,), (16,), (SLIP,))
        primitive = slab(0.1).primitive(grid)
        faces = slab(0.1).velocity_at((grid.faces(0),))
        self.assertAlmostEqual(float(faces[0, 0]), 0.0, places=15)
        self.assertAlmostEqual(float(faces[0, -1]), 0.0, places=15)
        self.assertGreater(float(np.min(primitive.rho)), 0.89)

    def test_compression_is_periodic(self):
        x = np.array([0.0, 1.0])
        values = compression(0.2).velocity_at((x,))
        self.assertAlmostEqual(float(values[0, 0]), float(values[0, 1]), places=15)

    def test_shear_needs_two_dimensions(self):
        self.assertRaises(UsageError, shear(0.1).primitive, Grid((1.0,), (16,), (PERIODIC,)))
        primitive = shear(0.1).primitive(Grid((1.0, 1.0), (16, 16), (PERIODIC, SLIP)))
        self.assertEqual(primitive.u.shape, (2, 16, 16))

    def test_ill_prepared_mode(self):
        well = slab(0.1)
        ill = ill_prepared(well, 0.5)
        c = (np.array([0.0]),)
        self.assertAlmostEqual(float(ill.rho0(c)[0]), float(well.rho0(c)[0]) * 1.25, places=14)
        self.assertAlmostEqual(float(ill.theta0(c)[0]), float(well.theta0(c)[0]) * 1.25, places=14)
        self.assertEqual(ill.parameters['ill_amplitude'], 0.5)
        self.assertRaises(UsageError, ill_prepared, well, 2.0)

    def test_scenario_by_name(self):
        scenario = scenario_by_name('slab', 0.1, 'ill', 0.4)
        self.assertEqual(scenario.boundary, SLIP)
        self.assertEqual(scenario.preparation, 'ill')
        self.assertEqual(scenario.euler_initial.name, 'slab')
        self.assertEqual(scenario.nsf_initial.name, 'slab-ill')
        well = scenario_by_name('compression')
        self.assertIs(well.euler_initial, well.nsf_initial)
        self.assertIn('well', PREPARATIONS)
        self.assertRaises(ConfigError, scenario_by_name, 'vortex')
        self.assertRaises(ConfigError, scenario_by_name, 'slab', preparation='mixed')
