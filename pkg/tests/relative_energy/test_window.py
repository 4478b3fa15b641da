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

from nsflab.grid_fields.fields import ReferenceFields, conservative_from_primitive
from nsflab.grid_fields.grid import Grid, SLIP
from nsflab.relative_energy.window import EssentialResidualWindow, _fitted, essential_residual_split, \
    quadratic_bounds_check, smoothstep
from nsflab.thermo.gas_model import gas_model_by_name
from nsflab.utility.exceptions import HypothesisViolationError, UsageError


class TestWindow(unittest.TestCase):

    def setUp(self):
        self.window = EssentialResidualWindow(0.5, 2.0, 0.5, 2.0, margin=0.25)

    def test_smoothstep(self):
        np.testing.assert_array_equal(smoothstep([-1.0, 0.0, 0.5, 1.0, 2.0]), [0.0, 0.0, 0.5, 1.0, 1.0])

    def test_cutoff_levels(self):
        self.assertEqual(float(self.window.cutoff(1.0, 1.0)), 1.0)
        self.assertEqual(float(self.window.cutoff(0.5, 2.0)), 1.0)
        self.assertEqual(float(self.window.cutoff(0.4, 1.0)), 0.0)
        self.assertEqual(float(self.window.cutoff(1.0, 2.5)), 0.0)
        self.assertEqual(float(self.window.cutoff(1e-9, 1.0)), 0.0)
        ramp = float(self.window.cutoff(2.25, 1.0))
        self.assertGreater(ramp, 0.0)
        self.assertLess(ramp, 1.0)

    def test_widened(self):
        self.assertEqual(self.window.widened(), (0.4, 2.5, 0.4, 2.5))

    def test_contains_is_strict(self):
        self.assertTrue(self.window.contains(np.array([1.0, 1.9]), np.array([1.0, 0.6])))
        self.assertFalse(self.window.contains(0.5, 1.0))

    def test_split_adds_up(self):
        rng = np.random.default_rng(2)
        rho = 10.0 ** rng.uniform(-1.0, 1.0, 64)
        theta = 10.0 ** rng.uniform(-1.0, 1.0, 64)
        values = rng.standard_normal((2, 64))
        essential, residual = essential_residual_split(values, self.window, rho, theta)
        np.testing.assert_allclose(essential + residual, values, rtol=0, atol=1e-15)
        self.assertEqual(essential.shape, (2, 64))

    def test_invalid_window(self):
        self.assertRaises(UsageError, EssentialResidualWindow, 2.0, 0.5, 0.5, 2.0)
        self.assertRaises(UsageError, EssentialResidualWindow, 0.5, 2.0, 0.5, 2.0, 0.0)


class TestQuadraticBounds(unittest.TestCase):

    def setUp(self):
        self.gas = gas_model_by_name('ideal')
        self.grid = Grid((1.0,), (32,), (SLIP,))
        self.window = EssentialResidualWindow(0.5, 2.0, 0.5, 2.0)
        x = self.grid.centers(0)
        self.rho = 1.0 + 0.2 * np.cos(np.pi * x)
        self.theta = 1.0 + 0.1 * np.cos(2 * np.pi * x)
        self.u = (0.1 * np.sin(np.pi * x))[np.newaxis]
        self.reference = ReferenceFields(self.grid, self.rho, self.theta, self.u)

    def test_identity_has_nothing_to_bound(self):
        state = conservative_from_primitive(self.gas, 0.0, self.grid, self.rho, self.u, self.theta)
        bounds = quadratic_bounds_check(state, self.reference, self.window, self.gas, 0.0, self.theta)
        self.assertEqual(bounds.relative_energy, 0.0)
        self.assertEqual(bounds.c, 0.0)

    def test_perturbed_state(self):
        x = self.grid.centers(0)
        rho = self.rho * (1.0 + 0.05 * np.cos(4 * np.pi * x))
        state = conservative_from_primitive(self.gas, 0.0, self.grid, rho, self.u + 0.01, self.theta)
        bounds = quadratic_bounds_check(state, self.reference, self.window, self.gas, 0.0, self.theta)
        self.assertGreater(bounds.relative_energy, 0.0)
        self.assertGreater(bounds.c_essential, 0.0)
        self.assertTrue(np.isfinite(bounds.c))

    def test_vacuum_pocket_is_split_at_the_fluid_state(self):
        rho = self.rho.copy()
        rho[10:14] = 1e-3
        state = conservative_from_primitive(self.gas, 0.0, self.grid, rho, self.u, self.theta)
        bounds = quadratic_bounds_check(state, self.reference, self.window, self.gas, 0.0, self.theta)
        self.assertEqual(bounds.essential_lhs, 0.0)
        self.assertGreater(bounds.residual_lhs, 4.0 / 32.0)
        self.assertGreater(bounds.relative_energy, 0.0)
        self.assertTrue(np.isfinite(bounds.c_residual))

    def test_reference_outside_window(self):
        window = EssentialResidualWindow(0.9, 2.0, 0.5, 2.0)
        state = conservative_from_primitive(self.gas, 0.0, self.grid, self.rho, self.u, self.theta)
        self.assertRaises(UsageError, quadratic_bounds_check, state, self.reference, window, self.gas, 0.0)

    def test_unbounded_constant(self):
        self.assertEqual(_fitted(0.0, 0.0, 'essential'), 0.0)
        self.assertRaises(HypothesisViolationError, _fitted, 1e-3, 0.0, 'residual')
