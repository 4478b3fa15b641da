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
from scipy.integrate import quad

from ..interfaces.abc_gas_model import ABCGasModel
from ..utility.exceptions import NumericalError, ConfigError
from ..utility.logger import Logger
from .expression import CompiledProfile

TAG = 'GasModel'

# name -> P(Z) expression
GAS_PROFILES = {
    'ideal': 'Z',
    'saturating': 'Z + Z^2/(1 + Z)',
}

Z_REF = 1.0
ENTROPY_TOLERANCE = 1e-10
LIMIT_Z = 1e8
QUAD_LIMIT = 200


class GasModel(ABCGasModel):
    """
    Molecular gas generated by a pressure profile P(Z).

    The monatomic ideal gas P(Z) = Z has closed forms everywhere
    (S(Z) = S0 - log Z); any other profile gets its entropy by adaptive
    quadrature of S' from Z_ref = 1, where S(1) = S0.
    """

    def __init__(self, name: str, expression: str = 'Z', s0: float = 0.0,
                 p_inf: float = None, limit_tolerance: float = 0.05,
                 entropy_tolerance: float = ENTROPY_TOLERANCE):
        """
        :param name: identifier of the model
        :param expression: P(Z) in the profile grammar
        :param s0: entropy integration constant S(1)
        :param p_inf: (Optional) declared limit of P(Z)/Z^(5/3); estimated at Z = 1e8 when omitted
        :param limit_tolerance: relative tolerance of the P(Z)/Z^(5/3) -> P_inf check
        :param entropy_tolerance: absolute tolerance of the entropy quadrature
        """
        self._name = name
        self._profile = CompiledProfile(expression, 'Z')
        self.expression = expression
        self.s0 = float(s0)
        self.limit_tolerance = float(limit_tolerance)
        self.entropy_tolerance = float(entropy_tolerance)
        self.is_ideal = self._profile.expr == self._profile.symbol
        if p_inf is None:
            p_inf = float(self._profile(LIMIT_Z) / LIMIT_Z ** (5.0 / 3.0))
        self.p_inf = float(p_inf)

    @property
    def name(self) -> str:
        return self._name

    def profile(self, z):
        return self._profile(z)

    def profile_derivative(self, z):
        return self._profile.derivative(z)

    def entropy_slope(self, z):
        """S'(Z) = -(3/2) ((5/3) P(Z) - P'(Z) Z) / Z^2"""
        z = np.asarray(z, dtype=float)
        return -1.5 * (5.0 / 3.0 * self.profile(z) - self.profile_derivative(z) * z) / z ** 2

    def entropy_profile(self, z):
        z = np.asarray(z, dtype=float)
        if self.is_ideal:
            with np.errstate(divide='ignore'):
                return self.s0 - np.log(z)
        return self._integrated_entropy(z)

    def sympy_profile(self):
        return self._profile.expr, self._profile.symbol

    def _integrated_entropy(self, z: np.ndarray) -> np.ndarray:
        """
        Integrates S' from Z_ref over the sorted distinct abscissae, segment by
        segment, so each evaluation point costs one short adaptive quadrature.
        """
        values, inverse = np.unique(z.ravel(), return_inverse=True)
        result = np.empty_like(values)
        for side in (values >= Z_REF, values < Z_REF):
            points = values[side]
            # walk away from Z_ref on each side
            order = np.argsort(np.abs(np.log(points)), kind='stable')
            accumulated, start = self.s0, Z_REF
            partial = np.empty_like(points)
            for index in order:
                accumulated += self._segment(start, points[index])
                start = points[index]
                partial[index] = accumulated
            result[side] = partial
        return result[inverse].reshape(z.shape)

    def _segment(self, lo: float, hi: float) -> float:
        if lo == hi:
            return 0.0
        # full_output appends a message instead of warning when quad reports a problem
        result = quad(lambda x: float(self.entropy_slope(x)), lo, hi, epsabs=self.entropy_tolerance,
                      epsrel=self.entropy_tolerance, limit=QUAD_LIMIT, full_output=1)
        value, abserr = result[0], result[1]
        if len(result) > 3:
            Logger.warning(f'entropy quadrature on [{lo}, {hi}] did not converge: {result[3]}', TAG)
            raise NumericalError("entropy quadrature did not converge", tolerance=float(abserr), interval=(lo, hi))
        if abserr > 10.0 * self.entropy_tolerance * max(1.0, abs(value)):
            raise NumericalError("entropy quadrature did not converge", tolerance=abserr, interval=(lo, hi))
        return value

    def __repr__(self):
        return f"GasModel(name='{self.name}', expression='{self.expression}', s0={self.s0})"


def gas_model_by_name(name: str, expression: str = None, s0: float = 0.0, **kwargs) -> GasModel:
    """
    Gas model factory used by the run configuration

    :param name: 'ideal', 'saturating' or 'expression'
    :param expression: P(Z), required when name is 'expression'
    :param s0: entropy constant
    :return: GasModel
    """
    if name == 'expression':
        if not expression:
            raise ConfigError("gas.expression is required for gas.name = expression")
        return GasModel(name, expression, s0, **kwargs)
    if name not in GAS_PROFILES:
        raise ConfigError(f"unknown gas model '{name}'", known=sorted(GAS_PROFILES))
    return GasModel(name, GAS_PROFILES[name], s0, **kwargs)
