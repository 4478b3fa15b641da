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
from nsflab.grid_fields.norms import TimeIntegral, inner_product, integral, lp_norm, trapezoid_cumulative
from nsflab.utility.exceptions import UsageError


class TestNorms(unittest.TestCase):

    def setUp(self):
        self.grid = Grid((2.0, 1.0), (16, 8), (SLIP, PERIODIC))

    def test_integral_of_constant(self):
        self.assertAlmostEqual(integral(np.full(self.grid.shape, 3.0), self.grid), 6.0, places=13)

    def test_integral_shape_mismatch(self):
        self.assertRaises(UsageError, integral, np.ones((8, 16)), self.grid)

    def test_lp_norms_of_constant(self):
        values = np.full(self.grid.shape, 2.0)
        self.assertAlmostEqual(lp_norm(values, self.grid, 2), 2.0 * np.sqrt(2.0), places=13)
        self.assertAlmostEqual(lp_norm(values, self.grid, 4), 2.0 * 2.0 ** 0.25, places=13)
        self.assertEqual(lp_norm(values, self.grid, np.inf), 2.0)
        self.assertRaises(UsageError, lp_norm, values, self.grid, 3)

    def test_vector_magnitude(self):
        u = np.stack([np.full(self.grid.shape, 3.0), np.full(self.grid.shape, -4.0)])
        self.assertAlmostEqual(lp_norm(u, self.grid, np.inf), 5.0, places=14)
        self.assertAlmostEqual(inner_product(u, u, self.grid), 50.0, places=12)


class TestTimeIntegral(unittest.TestCase):

    def test_trapezoid(self):
        np.testing.assert_allclose(trapezoid_cumulative([0.0, 1.0, 2.0], [0.0, 1.0, 2.0]), [0.0, 0.5, 2.0])

    def test_accumulator(self):
        accumulator = TimeIntegral()
        self.assertEqual(accumulator.value, 0.0)
        accumulator.add(0.0, 1.0)
        accumulator.add(0.5, 1.0)
        self.assertEqual(accumulator.value, 0.5)
        self.assertRaises(UsageError, accumulator.add, 0.25, 1.0)
