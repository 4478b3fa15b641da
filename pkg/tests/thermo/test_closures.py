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

from nsflab.thermo import closures
from nsflab.thermo.gas_model import gas_model_by_name
from nsflab.thermo.transport_model import transport_model_by_name
from nsflab.utility.exceptions import DomainError
from tests.thermo import closures_native_python
from tests.thermo import TEST_SIZE, GIBBS_TOLERANCE, QUADRATURE_GIBBS_TOLERANCE, ORACLE_ACCURACY


class TestClosures(unittest.TestCase):

    def setUp(self):
        self.ideal = gas_model_by_name('ideal')
        self.saturating = gas_model_by_name('saturating')
        self.rng = np.random.default_rng(7)

    def _assert_relative(self, value, expected, tolerance):
        expected = float(expected)
        self.assertLessEqual(abs(float(value) - expected), tolerance * max(1.0, abs(expected)),
                             f'{value!r} != {expected!r}')

    def test_ideal_gas_closed_forms(self):
        self.assertEqual(closures.pressure(self.ideal, 0.0, 1.0, 1.0), 1.0)
        self.assertEqual(closures.internal_energy(self.ideal, 0.0, 1.0, 1.0), 1.5)
        self.assertEqual(closures.entropy(self.ideal, 0.0, 1.0, 1.0), 0.0)
        self.assertAlmostEqual(float(closures.molecular_pressure(self.ideal, 2.0, 3.0)), 6.0, places=12)
        self.assertEqual(float(closures.radiation_pressure(3.0, 2.0)), 16.0)
        self.assertAlmostEqual(float(closures.pressure(self.ideal, 3.0, 1.0, 1.0)), 2.0, places=15)

    def test_random_states_against_native_python(self):
        for n in range(TEST_SIZE):
            rho = float(np.exp(self.rng.uniform(np.log(0.1), np.log(10.0))))
            theta = float(np.exp(self.rng.uniform(np.log(0.1), np.log(10.0))))
            a = float(self.rng.choice([0.0, 0.5]))
            self._assert_relative(closures.pressure(self.ideal, a, rho, theta),
                                  closures_native_python.pressure(rho, theta, a), ORACLE_ACCURACY)
            self._assert_relative(closures.internal_energy(self.ideal, a, rho, theta),
                                  closures_native_python.internal_energy(rho, theta, a), ORACLE_ACCURACY)
            self._assert_relative(closures.entropy(self.ideal, a, rho, theta),
                                  closures_native_python.entropy(rho, theta, a), ORACLE_ACCURACY)
            self._assert_relative(closures.sound_speed(self.ideal, a, rho, theta) ** 2,
                                  closures_native_python.sound_speed_squared(rho, theta, a), 1e-7)

    def test_ideal_sound_speed(self):
        c = closures.sound_speed(self.ideal, 0.0, 2.0, 3.0)
        self.assertAlmostEqual(float(c), np.sqrt(5.0 / 3.0 * 3.0), places=7)

    def test_density_weighted_forms_admit_vacuum(self):
        self.assertEqual(float(closures.rho_entropy(self.ideal, 0.0, 0.0, 2.0)), 0.0)
        self.assertEqual(float(closures.rho_internal_energy(self.ideal, 0.5, 0.0, 2.0)), 0.5 * 16.0)
        self.assertAlmostEqual(float(closures.rho_entropy(self.ideal, 0.5, 0.0, 2.0)), 4.0 * 0.5 / 3.0 * 8.0)

    def test_domain_errors(self):
        self.assertRaises(DomainError, closures.pressure, self.ideal, 0.0, 1.0, 0.0)
        self.assertRaises(DomainError, closures.pressure, self.ideal, 0.0, -1.0, 1.0)
        self.assertRaises(DomainError, closures.entropy, self.ideal, 0.0, 0.0, 1.0)
        self.assertRaises(DomainError, closures.pressure, self.ideal, 0.0, np.nan, 1.0)

    def test_gibbs_residual_on_log_grid(self):
        grid = np.logspace(-1.0, 1.0, 30)
        rho, theta = np.meshgrid(grid, grid, indexing='ij')
        for gas, tolerance in ((self.ideal, GIBBS_TOLERANCE), (self.saturating, QUADRATURE_GIBBS_TOLERANCE)):
            for a in (0.0, 0.5):
                thermal, mechanical = closures.gibbs_residual(gas, a, rho, theta).relative()
                self.assertLessEqual(float(np.max(thermal)), tolerance, f"{gas.name}, a = {a}")
                self.assertLessEqual(float(np.max(mechanical)), tolerance, f"{gas.name}, a = {a}")

    def test_gibbs_residual_detects_corrupted_energy(self):
        grid = np.logspace(-1.0, 1.0, 30)
        rho, theta = np.meshgrid(grid, grid, indexing='ij')
        corrupted = closures.gibbs_residual(
            self.ideal, 0.0, rho, theta,
            energy=lambda r, t: 1.01 * closures.internal_energy(self.ideal, 0.0, r, t))
        thermal, _ = corrupted.relative()
        self.assertGreater(float(np.max(thermal)), 1e-3)

    def test_heat_capacity(self):
        self.assertEqual(float(closures.heat_capacity_cv(self.ideal, 1.0, 1.0)), 1.5)
        cv = closures.heat_capacity_cv(self.saturating, np.array([0.5, 1.0, 2.0]), np.array([1.0, 2.0, 0.5]))
        self.assertTrue(np.all(cv > 0))

    def test_stress_tensor_of_shear(self):
        transport = transport_model_by_name('default')
        grad_u = np.zeros((2, 2, 1))
        grad_u[0, 1, 0] = 3.0
        stress = closures.stress_tensor(transport, 0.5, np.array([1.0]), grad_u)
        # mu(1) = 2, S_xy = nu mu du/dy
        self.assertAlmostEqual(float(stress[0, 1, 0]), 0.5 * 2.0 * 3.0)
        self.assertAlmostEqual(float(stress[1, 0, 0]), 0.5 * 2.0 * 3.0)
        self.assertAlmostEqual(float(stress[0, 0, 0]), 0.0)

    def test_stress_tensor_of_compression(self):
        transport = transport_model_by_name('default')
        grad_u = np.full((1, 1, 1), -2.0)
        stress = closures.stress_tensor(transport, 1.0, np.array([1.0]), grad_u)
        # mu (2 - 2/3) du/dx + eta du/dx with mu = 2, eta = 0.2
        self.assertAlmostEqual(float(stress[0, 0, 0]), 2.0 * (4.0 / 3.0) * -2.0 + 0.2 * -2.0)

    def test_heat_flux(self):
        transport = transport_model_by_name('default')
        q = closures.heat_flux(transport, 0.1, np.array([1.0]), np.array([[2.0]]))
        self.assertAlmostEqual(float(q[0, 0]), -0.1 * 2.0 * 2.0)
