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
Face fluxes of the Navier-Stokes-Fourier system.

Convective part: local Lax-Friedrichs (Rusanov) flux between primitive
states reconstructed on both sides of each face. Viscous and heat parts:
centered face gradients.
"""

from collections import namedtuple

import numpy as np

from ..grid_fields.boundary import GhostedField
from ..grid_fields.calculus import window, face_average, face_difference, face_gradient
from ..thermo.closures import pressure, rho_internal_energy, sound_speed, stress_tensor, heat_flux

FaceState = namedtuple('FaceState', 'rho u theta')
FaceFlux = namedtuple('FaceFlux', 'rho mom etot')


def _minmod(forward, backward):
    return np.where(forward * backward > 0, np.sign(forward) * np.minimum(np.abs(forward), np.abs(backward)), 0.0)


def _slope(field: GhostedField, axis: int, offset: int, method: str) -> np.ndarray:
    minus = window(field, {axis: offset - 1}, {axis: 1})
    center = window(field, {axis: offset}, {axis: 1})
    plus = window(field, {axis: offset + 1}, {axis: 1})
    if method == 'linear':
        return 0.5 * (plus - minus)
    return _minmod(plus - center, center - minus)


def reconstruct(field: GhostedField, axis: int, method: str = 'linear') -> tuple:
    """
    Values on the left and right side of the faces normal to axis

    :param method: 'linear' (central slope), 'minmod' or 'constant'
    :return: (left, right), arrays over the faces
    """
    left = window(field, {axis: -1}, {axis: 1})
    right = window(field, {axis: 0}, {axis: 1})
    if method == 'constant':
        return left, right
    return (left + 0.5 * _slope(field, axis, -1, method),
            right - 0.5 * _slope(field, axis, 0, method))


def reconstruct_state(rho: GhostedField, u: GhostedField, theta: GhostedField, axis: int, method: str) -> tuple:
    """
    Reconstructs (rho, u, theta) on both sides of the faces; faces where a
    reconstructed density or temperature is not positive fall back to the cell values.

    :return: (left FaceState, right FaceState, number of fallback faces)
    """
    rho_l, rho_r = reconstruct(rho, axis, method)
    u_l, u_r = reconstruct(u, axis, method)
    theta_l, theta_r = reconstruct(theta, axis, method)
    bad = ~((rho_l > 0) & (rho_r > 0) & (theta_l > 0) & (theta_r > 0))
    fallbacks = int(np.count_nonzero(bad))
    if fallbacks:
        rho_cl, rho_cr = reconstruct(rho, axis, 'constant')
        u_cl, u_cr = reconstruct(u, axis, 'constant')
        theta_cl, theta_cr = reconstruct(theta, axis, 'constant')
        rho_l, rho_r = np.where(bad, rho_cl, rho_l), np.where(bad, rho_cr, rho_r)
        u_l, u_r = np.where(bad, u_cl, u_l), np.where(bad, u_cr, u_r)
        theta_l, theta_r = np.where(bad, theta_cl, theta_l), np.where(bad, theta_cr, theta_r)
    return FaceState(rho_l, u_l, theta_l), FaceState(rho_r, u_r, theta_r), fallbacks


def _physical_flux(gas, a: float, state: FaceState, axis: int) -> tuple:
    p = pressure(gas, a, state.rho, state.theta)
    energy = 0.5 * state.rho * np.sum(state.u ** 2, axis=0) + rho_internal_energy(gas, a, state.rho, state.theta)
    normal = state.u[axis]
    mom_flux = state.rho * state.u * normal
    mom_flux[axis] += p
    conserved = (state.rho, state.rho * state.u, energy)
    flux = (state.rho * normal, mom_flux, (energy + p) * normal)
    return conserved, flux


def rusanov_flux(gas, a: float, left: FaceState, right: FaceState, axis: int) -> FaceFlux:
    """
    F = (F(W_L) + F(W_R)) / 2 - alpha (U_R - U_L) / 2,  alpha = max(|u_n| + c) over both sides
    """
    conserved_l, flux_l = _physical_flux(gas, a, left, axis)
    conserved_r, flux_r = _physical_flux(gas, a, right, axis)
    alpha = np.maximum(np.abs(left.u[axis]) + sound_speed(gas, a, left.rho, left.theta),
                       np.abs(right.u[axis]) + sound_speed(gas, a, right.rho, right.theta))
    return FaceFlux(*(0.5 * (fl + fr) - 0.5 * alpha * (ur - ul)
                      for fl, fr, ul, ur in zip(flux_l, flux_r, conserved_l, conserved_r)))


def viscous_flux(transport, nu: float, omega: float, u: GhostedField, theta: GhostedField, axis: int) -> tuple:
    """
    Viscous momentum flux S[:, axis] and energy flux (S u)_axis - q_axis on the faces normal to axis

    :return: (momentum flux (d, *faces), energy flux (*faces))
    """
    theta_face = face_average(theta, axis)
    u_face = face_average(u, axis)
    stress = stress_tensor(transport, nu, theta_face, face_gradient(u, axis))
    q_normal = heat_flux(transport, omega, theta_face, face_difference(theta, axis))
    work = np.sum(stress[axis] * u_face, axis=0)
    return stress[:, axis], work - q_normal
