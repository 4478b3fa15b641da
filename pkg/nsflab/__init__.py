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
Navier-Stokes-Fourier vanishing-dissipation laboratory.

Thermodynamic closures, a finite-volume NSF solver, a smooth Euler reference
solver, the relative energy functional and the diagnostics that check the
inequalities of the vanishing-dissipation convergence theory on computed data.
"""

__version__ = '0.1.0'
