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
Certification of the structural hypotheses of a gas/transport pair on sample grids.

Every check is evaluated independently and never raises: a check that cannot
be evaluated is reported as failed with the error as detail.
"""

from collections import OrderedDict, namedtuple

import numpy as np

from ..utility.exceptions import HypothesisViolationError, LabException
from ..utility.logger import Logger
from ..utility.utils import require, require_positive
from .closures import check_state

TAG = 'Hypotheses'

BOUND_SLACK = 1e-12
B_RANGE = (0.4, 1.0)

HypothesisResult = namedtuple('HypothesisResult', 'name passed witness detail')
AuxBounds = namedtuple('AuxBounds', 'C c C_witness c_witness')


class HypothesisReport:
    """Ordered pass/fail records, plus advisory records that are not graded"""

    def __init__(self):
        self.results = OrderedDict()
        self.advisories = OrderedDict()

    def add(self, result: HypothesisResult, advisory: bool = False):
        (self.advisories if advisory else self.results)[result.name] = result

    def passed(self, name: str) -> bool:
        return self.results[name].passed

    @property
    def pattern(self) -> dict:
        return {name: result.passed for name, result in self.results.items()}

    def lines(self) -> list:
        lines = []
        for result in self.results.values():
            lines.append(_format(result, 'PASS' if result.passed else 'FAIL'))
        for result in self.advisories.values():
            lines.append(_format(result, 'ADVISORY ' + ('PASS' if result.passed else 'FAIL')))
        return lines


def _format(result: HypothesisResult, verdict: str) -> str:
    witness = '' if result.witness is None else f' witness={result.witness!r}'
    return f'{result.name} {verdict}: {result.detail}{witness}'


def _first(mask, grid):
    indices = np.flatnonzero(mask)
    return float(grid[indices[0]]) if indices.size else None


def _guarded(name: str, check):
    try:
        return check()
    except (LabException, ArithmeticError, ValueError) as e:
        Logger.warning(f'{name} could not be evaluated: {e}', TAG)
        return HypothesisResult(name, False, None, f'not evaluable: {e}')


def _check_h2(gas, z):
    p0 = float(gas.profile(0.0))
    dp0 = float(gas.profile_derivative(0.0))
    dp = gas.profile_derivative(z)
    if p0 != 0.0:
        return HypothesisResult('H2', False, 0.0, f'P(0) = {p0} is not 0')
    if not dp0 > 0:
        # P' vanishes at the origin, the smallest sampled Z is the closest witness
        return HypothesisResult('H2', False, float(z[0]), f"P'(0) = {dp0} is not positive")
    bad = ~(dp > 0)
    if bad.any():
        return HypothesisResult('H2', False, _first(bad, z), "P'(Z) is not positive")
    return HypothesisResult('H2', True, None, "P(0) = 0, P'(Z) > 0")


def _h3_ratio(gas, z):
    return (5.0 / 3.0 * gas.profile(z) - gas.profile_derivative(z) * z) / z


def _check_h3(gas, z):
    ratio = _h3_ratio(gas, z)
    bad = ~(ratio > 0) | ~np.isfinite(ratio)
    if bad.any():
        return HypothesisResult('H3', False, _first(bad, z), "((5/3)P - P'Z)/Z is not in (0, c)")
    return HypothesisResult('H3', True, None,
                            f"0 < ((5/3)P - P'Z)/Z in [{ratio.min():.15g}, {ratio.max():.15g}], c = {ratio.max():.15g}")


def _check_h3_limit(gas, z):
    z_max = float(z[-1])
    observed = float(gas.profile(z_max) / z_max ** (5.0 / 3.0))
    passed = gas.p_inf > 0 and abs(observed - gas.p_inf) <= gas.limit_tolerance * gas.p_inf
    return HypothesisResult('H3-limit', bool(passed), z_max,
                            f'P(Z)/Z^(5/3) = {observed:.6g} at the largest Z, P_inf = {gas.p_inf:.6g}')


def _check_h6(gas, z):
    slope = gas.entropy_slope(z)
    bad = ~(slope < 0)
    if bad.any():
        return HypothesisResult('H6', False, _first(bad, z), "S'(Z) is not negative")
    s = gas.entropy_profile(z)
    increasing = np.diff(s) >= 0
    if increasing.any():
        return HypothesisResult('H6', False, _first(increasing, z[1:]), 'S(Z) is not strictly decreasing')
    return HypothesisResult('H6', True, None, "S'(Z) < 0")


def _check_h7(gas, z):
    s = gas.entropy_profile(z)
    tail, middle = abs(float(s[-1])), abs(float(s[len(s) // 2]))
    passed = tail <= gas.limit_tolerance and tail <= middle
    return HypothesisResult('H7', passed, float(z[-1]),
                            f'|S(Z)| = {tail:.6g} at the largest Z, limit 0 required')


def _check_h8(transport, theta):
    envelope = 1.0 + theta ** transport.b
    mu = transport.mu(theta)
    eta = transport.eta(theta)
    failures = [
        (~(mu >= transport.mu_lower * envelope * (1 - BOUND_SLACK)) | ~(mu > 0), 'mu(theta) < mu_lower (1 + theta^b)'),
        (~(mu <= transport.mu_upper * envelope * (1 + BOUND_SLACK)), 'mu(theta) > mu_upper (1 + theta^b)'),
        (~(eta >= 0), 'eta(theta) < 0'),
        (~(eta <= transport.eta_upper * envelope * (1 + BOUND_SLACK)), 'eta(theta) > eta_upper (1 + theta^b)'),
        (~(np.abs(transport.mu_derivative(theta)) <= transport.dmu_bound * (1 + BOUND_SLACK)),
         "|mu'(theta)| > dmu_bound"),
    ]
    if not B_RANGE[0] < transport.b <= B_RANGE[1]:
        return HypothesisResult('H8', False, transport.b, 'b is not in (2/5, 1]')
    for mask, detail in failures:
        if mask.any():
            return HypothesisResult('H8', False, _first(mask, theta), detail)
    return HypothesisResult('H8', True, None,
                            f'mu_lower = {transport.mu_lower}, mu_upper = {transport.mu_upper}, '
                            f'eta_upper = {transport.eta_upper}, b = {transport.b}')


def _check_h9(transport, theta):
    envelope = 1.0 + theta ** 3
    kappa = transport.kappa(theta)
    low = ~(kappa >= transport.kappa_lower * envelope * (1 - BOUND_SLACK))
    high = ~(kappa <= transport.kappa_upper * envelope * (1 + BOUND_SLACK))
    if low.any():
        return HypothesisResult('H9', False, _first(low, theta), 'kappa(theta) < kappa_lower (1 + theta^3)')
    if high.any():
        return HypothesisResult('H9', False, _first(high, theta), 'kappa(theta) > kappa_upper (1 + theta^3)')
    return HypothesisResult('H9', True, None,
                            f'kappa_lower = {transport.kappa_lower}, kappa_upper = {transport.kappa_upper}')


def hypothesis_report(gas, transport, z_grid, theta_grid) -> HypothesisReport:
    """
    Checks H2, H3, H6, H7 on z_grid and H8, H9 on theta_grid.

    :param gas: GasModel
    :param transport: TransportModel
    :param z_grid: positive Z samples
    :param theta_grid: positive temperature samples
    :return: HypothesisReport; the asymptote P(Z)/Z^(5/3) -> P_inf is an advisory record
    """
    z = np.unique(np.asarray(z_grid, dtype=float).ravel())
    theta = np.unique(np.asarray(theta_grid, dtype=float).ravel())
    require(z.size > 0 and theta.size > 0, "grids should not be empty")
    require_positive(z, 'z_grid')
    require_positive(theta, 'theta_grid')

    report = HypothesisReport()
    report.add(_guarded('H2', lambda: _check_h2(gas, z)))
    report.add(_guarded('H3', lambda: _check_h3(gas, z)))
    report.add(_guarded('H3-limit', lambda: _check_h3_limit(gas, z)), advisory=True)
    report.add(_guarded('H6', lambda: _check_h6(gas, z)))
    report.add(_guarded('H7', lambda: _check_h7(gas, z)))
    report.add(_guarded('H8', lambda: _check_h8(transport, theta)))
    report.add(_guarded('H9', lambda: _check_h9(transport, theta)))
    for line in report.lines():
        Logger.debug(line, TAG)
    return report


def h3_ratio(gas, z_grid):
    """((5/3)P(Z) - P'(Z) Z)/Z on the grid"""
    return _h3_ratio(gas, np.asarray(z_grid, dtype=float))


def aux_bounds_check(gas, rho, theta) -> AuxBounds:
    """
    Fits the constants of

        rho S(Z) <= C rho (1 + |log rho| + [log theta]^+)
        rho e_M >= c (rho theta + rho^(5/3))

    over the sample.

    :param gas: GasModel
    :param rho: positive densities
    :param theta: positive temperatures, same shape as rho
    :return: AuxBounds(C, c, witnesses)
    :raise HypothesisViolationError: C is not finite or c is not positive
    """
    rho, theta = check_state(np.ravel(rho), np.ravel(theta), rho_positive=True)
    require(rho.shape == theta.shape and rho.size > 0, "rho and theta should be non-empty samples of equal size")
    z = rho / theta ** 1.5
    if gas.is_ideal:
        s_m = gas.s0 - np.log(z)
        e_m = 1.5 * theta
    else:
        s_m = gas.entropy_profile(z)
        e_m = 1.5 * theta ** 2.5 * gas.profile(z) / rho

    upper_ratio = s_m / (1.0 + np.abs(np.log(rho)) + np.maximum(np.log(theta), 0.0))
    lower_ratio = rho * e_m / (rho * theta + rho ** (5.0 / 3.0))
    i_upper, i_lower = int(np.argmax(upper_ratio)), int(np.argmin(lower_ratio))
    big_c, small_c = float(upper_ratio[i_upper]), float(lower_ratio[i_lower])
    witness_upper = (float(rho[i_upper]), float(theta[i_upper]))
    witness_lower = (float(rho[i_lower]), float(theta[i_lower]))

    require(np.isfinite(big_c), "entropy bound constant is not finite", HypothesisViolationError,
            witness=witness_upper)
    require(np.isfinite(small_c) and small_c > 0, "energy bound constant is not positive",
            HypothesisViolationError, witness=witness_lower, value=small_c)
    return AuxBounds(big_c, small_c, witness_upper, witness_lower)
