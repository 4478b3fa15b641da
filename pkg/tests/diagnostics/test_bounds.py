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

from nsflab.diagnostics.bounds import UNIFORM_BOUND_KEYS, convergence_measure, interpolation_check, uniform_bounds
from nsflab.grid_fields.fields import ReferenceFields, conservative_from_primitive
from nsflab.grid_fields.grid import Grid, PERIODIC
from nsflab.nsf_solver.config import NsfRunConfig
from nsflab.nsf_solver.simulate import Trajectory
from nsflab.thermo.gas_model import gas_model_by_name
from nsflab.thermo.scaling import ScalingParams
from nsflab.thermo.transport_model import transport_model_by_name
from nsflab.utility.exceptions import UsageError


class TestUniformBounds(unittest.TestCase):

    def setUp(self):
        self.gas = gas_model_by_name('ideal')
        self.grid = Grid((1.0,), (16,), (PERIODIC,))
        self.scaling = ScalingParams(a=0.1, nu=1e-2, omega=1e-2, lam=0.5)
        self.config = NsfRunConfig(self.gas, transport_model_by_name('default'), self.scaling, self.grid)
        self.rho = np.full(16, 2.0)
        self.u = np.full((1, 16), 0.5)
        self.theta = np.ones(16)
        states = [conservative_from_primitive(self.gas, 0.1, self.grid, self.rho, self.u, self.theta, t)
                  for t in (0.0, 0.5)]
        self.trajectory = Trajectory.from_states(self.config, states)

    def test_uniform_state(self):
        bounds = uniform_bounds(self.trajectory)
        self.assertEqual(bounds._fields, UNIFORM_BOUND_KEYS)
        self.assertAlmostEqual(bounds.kinetic, 0.5, places=12)
        self.assertAlmostEqual(bounds.density_5_3, 2.0 ** (5.0 / 3.0), places=12)
        self.assertAlmostEqual(bounds.thermal, 2.0, places=10)
        self.assertAlmostEqual(bounds.radiation, 0.1, places=10)
        self.assertEqual(bounds.viscous_dissipation, 0.0)
        self.assertAlmostEqual(bounds.damping, 0.5 * 0.25 * 0.5, places=12)
        self.assertAlmostEqual(bounds.heat_dissipation, 0.0, places=10)
        weight = self.scaling.nu ** 0.375 * self.scaling.lam ** 0.125
        self.assertAlmostEqual(bounds.scaled_l4_velocity, weight * 0.5 * np.sqrt(0.5), places=12)

    def test_convergence_measure(self):
        references = [ReferenceFields(self.grid, self.rho, self.theta, self.u, t) for t in (0.0, 0.5)]
        self.assertAlmostEqual(convergence_measure(self.trajectory, references), 0.0, places=12)
        shifted = [ReferenceFields(self.grid, self.rho, self.theta, self.u - 0.1, t) for t in (0.0, 0.5)]
        self.assertAlmostEqual(convergence_measure(self.trajectory, shifted), 2.0 * 0.01, places=12)
        self.assertRaises(UsageError, convergence_measure, self.trajectory, references[:1])


class TestInterpolation(unittest.TestCase):

    def test_holds_for_random_fields(self):
        grid = Grid((1.0, 2.0), (16, 8), (PERIODIC, PERIODIC))
        rng = np.random.default_rng(9)
        fields = [rng.standard_normal((2, 16, 8)) for _ in range(20)]
        check = interpolation_check(fields, grid)
        self.assertTrue(check.passed)
        self.assertGreater(check.ratio, 0.0)
        self.assertLessEqual(check.ratio, 1.0 + 1e-12)

    def test_constant_field_is_sharp(self):
        grid = Grid((3.0,), (16,), (PERIODIC,))
        check = interpolation_check([np.full((1, 16), 2.0)], grid)
        self.assertAlmostEqual(check.ratio, 1.0, places=12)
        self.assertTrue(check.passed)

    def test_zero_field_counts_as_zero(self):
        grid = Grid((1.0,), (16,), (PERIODIC,))
        check = interpolation_check([np.zeros((1, 16))], grid)
        self.assertEqual(check.ratio, 0.0)
        self.assertTrue(check.passed)
