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

from abc import ABC, abstractmethod


class ABCTransportModel(ABC):
    """
    Transport coefficient interface: shear viscosity mu, bulk viscosity eta
    and heat conductivity kappa as functions of temperature.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @abstractmethod
    def mu(self, theta):
        """
        Shear viscosity profile mu(theta) >= mu_lower (1 + theta^b)

        :param theta: temperature >= 0
        :return: mu(theta)
        """
        pass

    @abstractmethod
    def eta(self, theta):
        """
        Bulk viscosity profile 0 <= eta(theta) <= eta_upper (1 + theta^b)

        :param theta: temperature >= 0
        :return: eta(theta)
        """
        pass

    @abstractmethod
    def kappa(self, theta):
        """
        Heat conductivity kappa_lower (1 + theta^3) <= kappa(theta) <= kappa_upper (1 + theta^3)

        :param theta: temperature >= 0
        :return: kappa(theta)
        """
        pass

    @abstractmethod
    def sympy_coefficients(self):
        """
        Symbolic (mu, eta, kappa) for manufactured solutions

        :return: (mu expression, eta expression, kappa expression, sympy symbol theta)
        """
        pass
