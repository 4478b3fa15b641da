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

import math

from ..thermo.scaling import ScalingParams
from ..utility.exceptions import DomainError
from ..utility.utils import require

ENVELOPE_TERMS = ('a', 'nu', 'omega', 'lambda', 'nu/sqrt(a)', 'omega/a', '(a/sqrt(nu^3 lambda))^(1/3)')


def envelope_terms(scaling: ScalingParams) -> dict:
    """
    The seven terms of the convergence rate bound

    :raise DomainError: a, nu or lambda is zero
    """
    a, nu, omega, lam = scaling.a, scaling.nu, scaling.omega, scaling.lam
    require(a > 0 and nu > 0 and lam > 0, "rate envelope needs a, nu and lambda greater than 0", DomainError,
            a=a, nu=nu, lam=lam)
    values = (a, nu, omega, lam, nu / math.sqrt(a), omega / a, (a / math.sqrt(nu ** 3 * lam)) ** (1.0 / 3.0))
    return dict(zip(ENVELOPE_TERMS, values))


def rate_envelope(scaling: ScalingParams) -> float:
    """max{a, nu, omega, lambda, nu/sqrt(a), omega/a, (a/sqrt(nu^3 lambda))^(1/3)}"""
    return max(envelope_terms(scaling).values())


def dominant_term(scaling: ScalingParams) -> str:
    terms = envelope_terms(scaling)
    return max(terms, key=terms.get)
