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

from .exceptions import DomainError, UsageError


def require(condition: bool, message: str = None, exc: type = UsageError, **context):
    """
    Checks the input condition is satisfied. If not satisfied raises.

    :param condition: condition to check
    :param message: (Optional) error message
    :param exc: (Optional) exception class, UsageError by default
    :param context: (Optional) structured context attached to the exception
    """
    if not condition:
        raise exc(message, **context)


def require_finite(*arrays, name: str = 'input'):
    for array in arrays:
        require(bool(np.all(np.isfinite(array))), f"{name} should be finite", DomainError)


def require_positive(array, name: str = 'input', exc: type = DomainError):
    array = np.asarray(array)
    require(bool(np.all(np.isfinite(array))), f"{name} should be finite", DomainError)
    require(bool(np.all(array > 0)), f"{name} should be greater than 0", exc)


def require_non_negative(array, name: str = 'input', exc: type = DomainError):
    array = np.asarray(array)
    require(bool(np.all(np.isfinite(array))), f"{name} should be finite", DomainError)
    require(bool(np.all(array >= 0)), f"{name} should not be negative", exc)


def relative_step(x, order: int = 3):
    """Returns the centered-difference step eps^(1/order) scaled by |x| (by 1 where x = 0)"""
    magnitude = np.abs(np.asarray(x, dtype=float))
    return np.finfo(float).eps ** (1.0 / order) * np.where(magnitude > 0, magnitude, 1.0)


def first_index(mask) -> tuple:
    """Returns the multi-index of the first True entry of mask, or None"""
    mask = np.asarray(mask)
    if not mask.any():
        return None
    return tuple(int(i) for i in np.unravel_index(int(np.argmax(mask)), mask.shape))
