# Copyright (C) 2024
# entwinelib contributors.
# All rights reserved.
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
Text helpers shared by the ``__str__`` methods of scalars, indices and
vectors. Everything rendered here can be read back by
:func:`entwinelib.cli.parse_expr`.
"""
from __future__ import unicode_literals

from fractions import Fraction

#: Separator between tensor legs.
TENSOR_SEP = " # "

#: Separator between a coefficient and the basis element it scales.
COEFF_SEP = " * "


def format_rational(value):
    """Render a Fraction as ``a`` or ``a/b``."""
    value = Fraction(value)
    if value.denominator == 1:
        return "%d" % value.numerator
    return "%d/%d" % (value.numerator, value.denominator)


def format_power(base, exponent):
    if exponent == 1:
        return base
    return "%s^%d" % (base, exponent)


def join_signed(terms):
    """
    Join ``(negative, body)`` pairs into ``a + b - c``. An empty list
    renders as ``0``.
    """
    if not terms:
        return "0"
    out = []
    for i, (negative, body) in enumerate(terms):
        if i == 0:
            out.append("-" + body if negative else body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out)


def parenthesize(text, needed):
    return "(%s)" % text if needed else text
