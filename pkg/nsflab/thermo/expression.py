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
Small expression grammar for constitutive profiles.

    expression := term (('+' | '-') term)*
    term       := factor (('*' | '/') factor)*
    factor     := ('+' | '-') factor | atom (('^' | '**') factor)?
    atom       := IDENTIFIER | NUMBER | '(' expression ')'

One identifier is allowed per expression (`Z` for pressure profiles,
`theta` for transport coefficients). Decimal constants are read as exact
rationals. Parsing is done by sympy after a lexical whitelist check, then the
tree is walked again so that nothing but +, -, *, /, powers, rationals and
the identifier can survive.
"""

import re

import numpy as np
import sympy
from sympy.parsing.sympy_parser import (
    parse_expr, standard_transformations, convert_xor, rationalize
)

from ..utility.exceptions import ConfigError
from ..utility.utils import require

_TRANSFORMATIONS = standard_transformations + (convert_xor, rationalize)
_TOKEN = re.compile(r'\s*(?:(\d+\.\d*|\.\d+|\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))')
_ALLOWED_NODES = (sympy.Add, sympy.Mul, sympy.Pow, sympy.Symbol, sympy.Rational)


def _lex(text: str, identifier: str) -> None:
    position = 0
    text = text.rstrip()
    require(len(text) > 0, "empty expression", ConfigError)
    while position < len(text):
        match = _TOKEN.match(text, position)
        require(match is not None and match.end() > position,
                f"unexpected character at {position} in '{text}'", ConfigError)
        name = match.group(2)
        require(name is None or name == identifier,
                f"unknown identifier '{name}' in '{text}', only '{identifier}' is allowed", ConfigError)
        position = match.end()


def parse_profile(text: str, identifier: str = 'Z'):
    """
    Parses a profile expression.

    :param text: expression text, e.g. 'Z + Z^2/(1 + Z)'
    :param identifier: the single free identifier
    :return: (sympy expression, sympy symbol)
    """
    _lex(text, identifier)
    symbol = sympy.Symbol(identifier, nonnegative=True)
    try:
        expr = parse_expr(text, local_dict={identifier: symbol}, transformations=_TRANSFORMATIONS)
    except Exception as e:
        raise ConfigError(f"cannot parse '{text}': {e}")

    for node in sympy.preorder_traversal(expr):
        require(isinstance(node, _ALLOWED_NODES),
                f"'{text}' uses {type(node).__name__}, which the grammar does not allow", ConfigError)
    return expr, symbol


class CompiledProfile:
    """
    Vectorized numpy evaluation of a parsed profile and of its first derivative.
    """

    def __init__(self, text: str, identifier: str = 'Z'):
        self.text = text
        self.expr, self.symbol = parse_profile(text, identifier)
        self.derivative_expr = sympy.diff(self.expr, self.symbol)
        self._value = sympy.lambdify(self.symbol, self.expr, modules='numpy')
        self._derivative = sympy.lambdify(self.symbol, self.derivative_expr, modules='numpy')

    @staticmethod
    def _evaluate(function, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide='ignore', invalid='ignore'):
            return np.asarray(function(x), dtype=float) + np.zeros_like(x)

    def __call__(self, x):
        return self._evaluate(self._value, x)

    def derivative(self, x):
        return self._evaluate(self._derivative, x)

    def __repr__(self):
        return f"CompiledProfile('{self.text}')"
