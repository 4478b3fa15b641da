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

from fractions import Fraction

import numpy as np

from ..interfaces.abc_transport_model import ABCTransportModel
from ..utility.exceptions import ConfigError
from .expression import CompiledProfile


class TransportModel(ABCTransportModel):
    """
    Transport coefficients given as expressions of `theta`, with the
    constants of their growth envelopes:

        mu_lower (1 + theta^b) <= mu(theta) <= mu_upper (1 + theta^b),  |mu'(theta)| <= dmu_bound
        0 <= eta(theta) <= eta_upper (1 + theta^b)
        kappa_lower (1 + theta^3) <= kappa(theta) <= kappa_upper (1 + theta^3)
    """

    def __init__(self, name: str, mu: str = '1 + theta', eta: str = '(1 + theta)/10',
                 kappa: str = '1 + theta^3', b: float = 1.0,
                 mu_lower: float = 1.0, mu_upper: float = 1.0, eta_upper: float = 1.0,
                 kappa_lower: float = 1.0, kappa_upper: float = 1.0, dmu_bound: float = 1.0):
        self._name = name
        self._mu = CompiledProfile(mu, 'theta')
        self._eta = CompiledProfile(eta, 'theta')
        self._kappa = CompiledProfile(kappa, 'theta')
        self.b = float(b)
        self.mu_lower = float(mu_lower)
        self.mu_upper = float(mu_upper)
        self.eta_upper = float(eta_upper)
        self.kappa_lower = float(kappa_lower)
        self.kappa_upper = float(kappa_upper)
        self.dmu_bound = float(dmu_bound)

    @property
    def name(self) -> str:
        return self._name

    def mu(self, theta):
        return self._mu(theta)

    def mu_derivative(self, theta):
        return self._mu.derivative(theta)

    def eta(self, theta):
        return self._eta(theta)

    def kappa(self, theta):
        return self._kappa(theta)

    def sympy_coefficients(self):
        return self._mu.expr, self._eta.expr, self._kappa.expr, self._mu.symbol

    def __repr__(self):
        return (f"TransportModel(name='{self.name}', mu='{self._mu.text}', eta='{self._eta.text}', "
                f"kappa='{self._kappa.text}', b={self.b})")


def transport_model_by_name(name: str, b: float = 1.0, mu: str = None, eta: str = None,
                            kappa: str = None) -> TransportModel:
    """
    Transport model factory used by the run configuration

    :param name: 'default', 'power_law' or 'expression'
    :param b: viscosity growth exponent, used by 'power_law'
    :param mu: mu(theta), used by 'expression'
    :param eta: eta(theta), used by 'expression'
    :param kappa: kappa(theta), used by 'expression'
    :return: TransportModel
    """
    if name == 'default':
        return TransportModel('default')
    if name == 'power_law':
        # (1 + theta)^b lies between 2^(b-1) (1 + theta^b) and 1 + theta^b, with |mu'| <= b
        exponent = Fraction(b).limit_denominator(1000)
        return TransportModel('power_law',
                              mu=f'(1 + theta)^({exponent})',
                              eta=f'(1 + theta)^({exponent})/10',
                              b=float(exponent),
                              mu_lower=float(np.power(2.0, float(exponent) - 1.0)),
                              eta_upper=0.1, dmu_bound=float(exponent))
    if name == 'expression':
        if not (mu and eta and kappa):
            raise ConfigError("transport.mu, transport.eta and transport.kappa are required "
                              "for transport.name = expression")
        return TransportModel('expression', mu=mu, eta=eta, kappa=kappa, b=b)
    raise ConfigError(f"unknown transport model '{name}'", known=['default', 'expression', 'power_law'])
