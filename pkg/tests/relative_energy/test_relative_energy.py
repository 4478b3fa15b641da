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

from nsflab.grid_fields.fields import PrimitiveState, ReferenceFields, conservative_from_primitive
from nsflab.grid_fields.grid import Grid, PERIODIC, SLIP
from nsflab.relative_energy.relative_energy import RelativeEnergyReport, ballistic_free_energy, \
    free_energy_density_slope, relative_energy, relative_energy_density
from nsflab.thermo.gas_model import gas_model_by_name
from nsflab.utility.exceptions import DomainError, UsageError
from tests.thermo.closures_native_python import ballistic_free_energy as native_ballistic_free_energy


class TestRelativeEnergy(unittest.TestCase):

    def setUp(self):
        self.ideal = gas_model_by_name('ideal')
        self.saturating = gas_model_by_name('saturating')
        self.grid = Grid((2.0,), (32,), (SLIP,))
        x = self.grid.centers(0)
        self.rho = 1.0 + 0.3 * np.cos(np.pi * x)
        self.theta = 1.0 + 0.2 * np.sin(np.pi * x)
        self.u = (0.1 * np.sin(np.pi * x))[np.newaxis]

    def test_ballistic_free_energy_at_unit_state(self):
        self.assertEqual(float(ballistic_free_energy(self.ideal, 0.0, 1.0, 1.0, 1.0)), 1.5)
        expected = float(native_ballistic_free_energy(2.0, 0.5, 1.5, 0.1))
        self.assertAlmostEqual(float(ballistic_free_energy(self.ideal, 0.1, 2.0, 0.5, 1.5)), expected, places=13)

    def test_ballistic_free_energy_at_vacuum(self):
        self.assertEqual(float(ballistic_free_energy(self.ideal, 0.0, 0.0, 1.0, 1.0)), 0.0)
        self.assertRaises(DomainError, ballistic_free_energy, self.ideal, 0.0, 1.0, 1.0, 0.0)

    def test_closed_form_slope_matches_differences(self):
        r, Theta = 1.7, 0.6
        h = 1e-5
        numeric = (ballistic_free_energy(self.ideal, 0.01, r + h, Theta, Theta)
                   - ballistic_free_energy(self.ideal, 0.01, r - h, Theta, Theta)) / (2.0 * h)
        self.assertAlmostEqual(float(free_energy_density_slope(self.ideal, 0.01, r, Theta)), float(numeric),
                               places=8)

    def test_identity_vanishes(self):
        for gas in (self.ideal, self.saturating):
            state = conservative_from_primitive(gas, 0.01, self.grid, self.rho, self.u, self.theta)
            reference = ReferenceFields(self.grid, self.rho, self.theta, self.u)
            self.assertEqual(relative_energy(state, reference, gas, 0.01, self.theta), 0.0)

    def test_uniform_velocity_offset(self):
        c = 0.3
        ones = np.ones(32)
        state = conservative_from_primitive(self.ideal, 0.0, self.grid, ones, np.full((1, 32), c), ones)
        reference = ReferenceFields(self.grid, ones, ones, np.zeros((1, 32)))
        self.assertAlmostEqual(relative_energy(state, reference, self.ideal, 0.0, ones), 0.5 * c ** 2 * 2.0,
                               places=14)

    def test_non_negative_near_reference(self):
        rng = np.random.default_rng(5)
        rho = 10.0 ** rng.uniform(-3.0, 2.0, 500)
        theta = 10.0 ** rng.uniform(-2.0, 2.0, 500)
        u = rng.standard_normal(500)
        density = relative_energy_density(self.ideal, 0.01, rho, theta, u, 1.0, 1.0, 0.0)
        self.assertTrue(bool(np.all(density >= -1e-12)))

    def test_grids_must_match(self):
        state = conservative_from_primitive(self.ideal, 0.0, self.grid, self.rho, self.u, self.theta)
        other = Grid((2.0,), (32,), (PERIODIC,))
        reference = ReferenceFields.from_primitive(PrimitiveState(other, self.rho, self.u, self.theta))
        self.assertRaises(UsageError, relative_energy, state, reference, self.ideal, 0.0)


class TestRelativeEnergyReport(unittest.TestCase):

    def test_from_series(self):
        report = RelativeEnergyReport.from_series([0.0, 0.1, 0.2], [1e-4, 3e-4, 2e-4], 0.5)
        self.assertEqual(report.sup_value, 3e-4)
        self.assertEqual(report.initial, 1e-4)
        self.assertEqual(report.rows()[1], [0.1, 3e-4, 0.5])

    def test_lengths_must_match(self):
        self.assertRaises(UsageError, RelativeEnergyReport.from_series, [0.0, 0.1], [1.0], 0.5)
