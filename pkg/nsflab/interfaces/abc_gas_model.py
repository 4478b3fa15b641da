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


class ABCGasModel(ABC):
    """
    Molecular equation of state interface.

    The molecular pressure, energy and entropy are generated by a single
    profile P(Z) of the variable Z = rho / theta^(3/2):

        p_M = theta^(5/2) P(Z),  e_M = (3/2) theta^(5/2) P(Z) / rho,  s_M = S(Z)
    """

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @abstractmethod
    def profile(self, z):
        """
        Molecular pressure profile P(Z)

        :param z: Z >= 0, scalar or array
        :return: P(Z)
        """
        pass

    @abstractmethod
    def profile_derivative(self, z):
        """
        Derivative P'(Z)

        :param z: Z >= 0, scalar or array
        :return: P'(Z)
        """
        pass

    @abstractmethod
    def entropy_profile(self, z):
        """
        Entropy profile S(Z) with S(1) = S0.

        Formula:
        S'(Z) = -(3/2) ((5/3) P(Z) - P'(Z) Z) / Z^2

        :param z: Z > 0, scalar or array
        :return: S(Z)
        """
        pass

    @abstractmethod
    def sympy_profile(self):
        """
        Symbolic P(Z) for manufactured solutions

        :return: (sympy expression, sympy symbol Z)
        """
        pass
