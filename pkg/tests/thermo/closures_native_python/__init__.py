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

from decimal import Decimal, getcontext

getcontext().prec = 50


def _d(x):
    return Decimal(repr(float(x)))


def pressure(rho, theta, a):
    rho, theta, a = _d(rho), _d(theta), _d(a)
    return rho * theta + a / 3 * theta ** 4


def internal_energy(rho, theta, a):
    rho, theta, a = _d(rho), _d(theta), _d(a)
    return Decimal(3) / 2 * theta + a * theta ** 4 / rho


def entropy(rho, theta, a, s0=0):
    rho, theta, a = _d(rho), _d(theta), _d(a)
    return _d(s0) - rho.ln() + Decimal(3) / 2 * theta.ln() + 4 * a / 3 * theta ** 3 / rho


def sound_speed_squared(rho, theta, a):
    rho, theta, a = _d(rho), _d(theta), _d(a)
    p_rho = theta
    p_theta = rho + 4 * a / 3 * theta ** 3
    cv_total = Decimal(3) / 2 + 4 * a * theta ** 3 / rho
    return p_rho + theta * p_theta ** 2 / (rho ** 2 * cv_total)


def ballistic_free_energy(rho, theta, big_theta, a, s0=0):
    rho, theta = _d(rho), _d(theta)
    e = internal_energy(rho, theta, a)
    s = entropy(rho, theta, a, s0)
    return rho * (e - _d(big_theta) * s)
