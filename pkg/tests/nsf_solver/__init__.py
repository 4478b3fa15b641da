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

import numpy as np

from nsflab.grid_fields.fields import InitialData

MMS_CELLS = (64, 128, 256)
MMS_MIN_ORDER = 1.8
# energy budget residual drops at least this much when the grid is refined twice
BUDGET_MIN_RATIO = 3.0
RECOVERY_ACCURACY = 1e-11


def wave(amplitude: float = 0.1) -> InitialData:
    """Smooth 1-D data compatible with slip walls at x = 0 and x = 1"""
    return InitialData(rho0=lambda c: 1.0 + amplitude * np.cos(np.pi * c[0]),
                       theta0=lambda c: 1.0 + 0.5 * amplitude * np.cos(2.0 * np.pi * c[0]),
                       u0=lambda c: (amplitude * np.sin(np.pi * c[0]),),
                       name='wave', parameters={'amplitude': amplitude})
