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


class ABCSolver(ABC):
    """
    Semi-discrete conservative solver interface.

    A solver evolves a FluidState (rho, mom, etot) on a Grid with a strong
    stability preserving Runge-Kutta method wrapped around its right hand side.
    """

    @abstractmethod
    def rhs(self, state, t: float = None):
        """
        Time derivatives of the conservative fields

        :param state: FluidState
        :param t: (Optional) time, used by time dependent forcing
        :return: (d rho/dt, d mom/dt, d etot/dt)
        """
        pass

    @abstractmethod
    def stable_dt(self, state) -> float:
        """
        Largest admissible time step for the given state

        :param state: FluidState
        :return: dt > 0
        """
        pass

    @abstractmethod
    def step(self, state, dt: float):
        """
        Advances the state by dt

        :param state: FluidState
        :param dt: time step, dt <= stable_dt(state)
        :return: advanced FluidState
        """
        pass
