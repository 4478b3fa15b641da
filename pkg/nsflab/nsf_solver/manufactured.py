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
Manufactured solutions: smooth periodic fields on the unit box whose NSF
residual is computed symbolically and fed back as a source term.
"""

import numpy as np
import sympy

from ..grid_fields.fields import InitialData, FluidState, conservative_from_primitive
from ..grid_fields.grid import Grid, PERIODIC
from ..grid_fields.norms import lp_norm
from ..thermo.scaling import ScalingParams
from ..utility.utils import require


class ManufacturedSolution:

    def __init__(self, gas, transport, scaling: ScalingParams, dim: int = 1, amplitude: float = 0.1):
        require(dim in (1, 2), "manufactured solutions are built for 1-D and 2-D boxes")
        self.gas = gas
        self.transport = transport
        self.scaling = scaling
        self.dim = dim
        self.amplitude = amplitude

        t = sympy.Symbol('t', real=True)
        x = sympy.symbols(f'x0:{dim}', real=True)
        amp = sympy.nsimplify(amplitude)
        two_pi = 2 * sympy.pi
        rho = 1 + amp * sympy.sin(two_pi * (x[0] - t))
        theta = 1 + amp * sympy.cos(two_pi * (x[0] + t))
        u = [sympy.Rational(1, 2) + amp * sympy.cos(two_pi * x[0])]
        if dim == 2:
            rho += amp * sympy.cos(two_pi * x[1]) / 2
            theta += amp * sympy.sin(two_pi * (x[1] - t)) / 2
            u[0] += amp * sympy.sin(two_pi * x[1]) / 2
            u.append(sympy.Rational(-1, 4) + amp * sympy.sin(two_pi * (x[0] + x[1] - t)))
        self.fields = (rho, u, theta)
        self._symbols = (t,) + tuple(x)
        self._primitive = [sympy.lambdify(self._symbols, expr, modules='numpy') for expr in [rho, theta] + u]
        self._forcing = [sympy.lambdify(self._symbols, expr, modules='numpy')
                         for expr in self._residuals(t, x, rho, u, theta)]

    def _closures(self, rho, theta):
        profile, z = self.gas.sympy_profile()
        a = sympy.Float(self.scaling.a)
        molecular = theta ** sympy.Rational(5, 2) * profile.subs(z, rho / theta ** sympy.Rational(3, 2))
        p = molecular + a / 3 * theta ** 4
        rho_e = sympy.Rational(3, 2) * molecular + a * theta ** 4
        return p, rho_e

    def _residuals(self, t, x, rho, u, theta):
        dim = self.dim
        nu, omega, lam = (sympy.Float(v) for v in (self.scaling.nu, self.scaling.omega, self.scaling.lam))
        mu_expr, eta_expr, kappa_expr, theta_symbol = self.transport.sympy_coefficients()
        mu, eta, kappa = (e.subs(theta_symbol, theta) for e in (mu_expr, eta_expr, kappa_expr))
        p, rho_e = self._closures(rho, theta)
        energy = rho * sum(ui ** 2 for ui in u) / 2 + rho_e

        grad = [[sympy.diff(u[i], x[j]) for j in range(dim)] for i in range(dim)]
        div = sum(grad[i][i] for i in range(dim))
        stress = [[nu * (mu * (grad[i][j] + grad[j][i] - sympy.Rational(2, 3) * div * int(i == j))
                         + eta * div * int(i == j)) for j in range(dim)] for i in range(dim)]
        q = [-omega * kappa * sympy.diff(theta, x[j]) for j in range(dim)]

        f_rho = sympy.diff(rho, t) + sum(sympy.diff(rho * u[j], x[j]) for j in range(dim))
        f_mom = [sympy.diff(rho * u[i], t)
                 + sum(sympy.diff(rho * u[i] * u[j] + p * int(i == j) - stress[i][j], x[j]) for j in range(dim))
                 + lam * u[i] for i in range(dim)]
        f_etot = (sympy.diff(energy, t)
                  + sum(sympy.diff((energy + p) * u[j] - sum(stress[j][i] * u[i] for i in range(dim)) + q[j], x[j])
                        for j in range(dim))
                  + lam * sum(ui ** 2 for ui in u))
        return [f_rho] + f_mom + [f_etot]

    def grid(self, cells: int) -> Grid:
        return Grid((1.0,) * self.dim, (cells,) * self.dim, (PERIODIC,) * self.dim)

    def _evaluate(self, functions, grid: Grid, t: float) -> list:
        coordinates = grid.mesh()
        return [np.broadcast_to(np.asarray(f(t, *coordinates), dtype=float), grid.shape).copy() for f in functions]

    def primitive(self, grid: Grid, t: float) -> tuple:
        """Exact (rho, u, theta) at the cell centers"""
        values = self._evaluate(self._primitive, grid, t)
        return values[0], np.stack(values[2:]), values[1]

    def state(self, grid: Grid, t: float) -> FluidState:
        rho, u, theta = self.primitive(grid, t)
        return conservative_from_primitive(self.gas, self.scaling.a, grid, rho, u, theta, t)

    def initial_data(self) -> InitialData:
        rho_f, theta_f = self._primitive[0], self._primitive[1]
        u_f = self._primitive[2:]
        return InitialData(rho0=lambda c: rho_f(0.0, *c),
                           theta0=lambda c: theta_f(0.0, *c),
                           u0=lambda c: [f(0.0, *c) for f in u_f],
                           name='manufactured',
                           parameters={'dim': self.dim, 'amplitude': self.amplitude})

    def forcing(self, grid: Grid):
        """Source term callable forcing(t) -> (f_rho, f_mom, f_etot) on the cells of grid"""

        def evaluate(t: float):
            values = self._evaluate(self._forcing, grid, t)
            return values[0], np.stack(values[1:1 + self.dim]), values[-1]

        return evaluate

    def errors(self, state: FluidState) -> dict:
        """L2 errors of the conservative fields against the exact solution at state.time"""
        exact = self.state(state.grid, state.time)
        return {
            'rho': lp_norm(state.rho - exact.rho, state.grid, 2),
            'mom': lp_norm(state.mom - exact.mom, state.grid, 2),
            'etot': lp_norm(state.etot - exact.etot, state.grid, 2),
        }


def observed_orders(errors: list) -> dict:
    """Orders log2(e_N / e_2N) between successive grids, per field"""
    return {name: [float(np.log2(coarse[name] / fine[name])) for coarse, fine in zip(errors, errors[1:])]
            for name in errors[0]}
