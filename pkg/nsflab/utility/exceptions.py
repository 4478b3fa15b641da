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


class LabException(Exception):
    """
    Base exception of the laboratory.

    :param message: human readable message
    :param context: (Optional) structured context, e.g. offending cell or tolerance
    """

    def __init__(self, message: str = None, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def __str__(self):
        if not self.context:
            return str(self.message)
        details = ', '.join(f'{key}={value}' for key, value in sorted(self.context.items()))
        return f'{self.message} ({details})'


class DomainError(LabException):
    """Input outside the domain of a closure (non-finite, non-positive temperature, ...)"""


class NumericalError(LabException):
    """A numerical procedure failed to reach its tolerance; `context['tolerance']` holds what was achieved"""


class ModelViolationError(LabException):
    """A constitutive model breaks a structural property it is required to have"""


class HypothesisViolationError(LabException):
    """A fitted bound that must be finite/positive is not"""


class UsageError(LabException):
    """Wrong call: mismatched grids, unfilled ghosts, extrapolation, missing instants"""


class PositivityFailure(LabException):
    """Density or internal energy lost positivity; `context['cell']` holds the offending index"""


class ConfigError(LabException):
    """Unknown key or unparseable value in a run configuration"""
