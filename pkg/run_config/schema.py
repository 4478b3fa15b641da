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

"""
Schema of the run configuration file.

A configuration file holds one `key = value` pair per line; text after `#`
is a comment and blank lines are ignored. List values are whitespace
separated. Keys missing from the file take the default below; unknown keys
and values that do not parse as their type are errors.

key: configuration key
value: (type, default, description), type is one of
    'str', 'int', 'float', 'floats' (list of floats), 'ints', 'strs'

"""

schema = {
    "gas.name": ('str', 'ideal', "gas model: ideal, saturating or expression"),
    "gas.expression": ('str', '', "P(Z) for gas.name = expression, e.g. Z + Z^2/(1 + Z)"),
    "gas.s0": ('float', 0.0, "entropy constant S(1)"),
    "gas.limit_tolerance": ('float', 0.05, "relative tolerance of the P(Z)/Z^(5/3) limit check"),
    "transport.name": ('str', 'default', "transport law: default, power_law or expression"),
    "transport.mu": ('str', '', "mu(theta) for transport.name = expression"),
    "transport.eta": ('str', '', "eta(theta) for transport.name = expression"),
    "transport.kappa": ('str', '', "kappa(theta) for transport.name = expression"),
    "transport.b": ('float', 1.0, "growth exponent of mu, in (2/5, 1]"),
    "scaling.a": ('float', 0.01, "radiation constant"),
    "scaling.nu": ('float', 0.08, "viscosity scale"),
    "scaling.omega": ('float', 0.004, "heat conductivity scale"),
    "scaling.lambda": ('float', 0.63, "damping rate"),
    "grid.dim": ('int', 1, "number of space dimensions, 1 or 2"),
    "grid.extents": ('floats', [1.0], "box lengths, one per axis or one for all"),
    "grid.cells": ('ints', [128], "cells per axis, one per axis or one for all"),
    "grid.bc": ('strs', ['slip'], "periodic or slip per axis, one per axis or one for all"),
    "cfl": ('float', 0.5, "Courant number of the NSF solver"),
    "t_end": ('float', 0.2, "final time"),
    "output.stride": ('int', 10, "steps between output instants"),
    "floors.rho": ('float', 1e-10, "density floor"),
    "floors.theta": ('float', 1e-10, "temperature floor"),
    "reconstruction": ('str', 'linear', "face reconstruction: linear, minmod or constant"),
    "scenario.name": ('str', 'slab', "initial data family: slab, compression or shear"),
    "scenario.amplitude": ('float', 0.05, "perturbation amplitude of the initial data"),
    "scenario.preparation": ('str', 'well', "well or ill prepared NSF initial data"),
    "scenario.ill_amplitude": ('float', 0.5, "size of the extra mode of ill-prepared data, in (0, 2)"),
    "euler.refinement": ('int', 2, "refinement factor of the Euler reference grid"),
    "euler.cfl": ('float', 0.4, "Courant number of the Euler reference"),
    "euler.filter": ('float', 1.0, "nominal amplitude of the sixth order filter"),
    "euler.growth_factor": ('float', 20.0, "gradient growth ending the smooth life span"),
    "euler.safety": ('float', 0.8, "T_safe as a fraction of the detected life span"),
    "path.a_values": ('floats', [1e-2, 1e-3, 1e-4], "strictly decreasing values of a"),
    "path.alpha": ('float', 0.55, "nu = a^alpha"),
    "path.beta": ('float', 1.2, "omega = a^beta"),
    "path.gamma": ('float', 0.1, "lambda = a^gamma"),
    "coercivity.rho_range": ('floats', [0.5, 2.0], "density range of K and of the essential window"),
    "coercivity.theta_range": ('floats', [0.5, 2.0], "temperature range of K and of the essential window"),
    "coercivity.samples": ('int', 10000, "low-discrepancy samples of the coercivity estimate"),
    "window.margin": ('float', 0.25, "relative widening of the essential window cutoff"),
    "cache.dir": ('str', '', "directory of the Euler reference cache, empty for none"),
}
