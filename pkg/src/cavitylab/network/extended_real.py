"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math
from typing import Any, TypeAlias

from cavitylab.exceptions import UndefinedArithmeticError

__all__ = [
    'CavityVector',
    'ExtReal',
    'NEG_INF',
    'ext_add',
    'ext_max',
    'ext_sub',
    'format_ext_real',
    'is_ext_real',
    'is_neg_inf',
]

# Extended reals are plain floats: every finite float plus NEG_INF. Positive infinity and NaN never occur.
ExtReal: TypeAlias = float

NEG_INF: ExtReal = float('-inf')

# Cavity values B(x) for x = 0, ..., T-1, with B(0) = 0
CavityVector: TypeAlias = tuple[ExtReal, ...]


def is_neg_inf(value: ExtReal) -> bool:
    return value == NEG_INF


def is_ext_real(value: Any) -> bool:
    """
    Returns True if the value is a float or int that is either finite or `NEG_INF`.
    """
    if type(value) not in (int, float):
        return False
    return math.isfinite(value) or value == NEG_INF


def ext_add(*values: ExtReal) -> ExtReal:
    """
    Sum of extended reals. The result is `NEG_INF` as soon as one summand is `NEG_INF`.
    """
    total = 0.0
    for value in values:
        if value == NEG_INF:
            return NEG_INF
        total += value
    return total


def ext_max(*values: ExtReal) -> ExtReal:
    """
    Maximum of extended reals. `NEG_INF` is the neutral element, so the maximum of no values is `NEG_INF`.
    """
    return max(values, default=NEG_INF)


def ext_sub(minuend: ExtReal, subtrahend: ExtReal) -> ExtReal:
    """
    Difference of two extended reals.

    Subtracting `NEG_INF` is undefined (there is no positive infinity) and raises an `UndefinedArithmeticError`, this
    includes the case `NEG_INF - NEG_INF`. A `NEG_INF` minuend with a finite subtrahend results in `NEG_INF`.
    """
    if subtrahend == NEG_INF:
        raise UndefinedArithmeticError(
            reason='Subtraction of NEG_INF is undefined.',
            minuend=format_ext_real(minuend),
        )
    return minuend - subtrahend


def format_ext_real(value: ExtReal) -> float | str:
    """
    Converts an extended real to its JSON representation: `NEG_INF` becomes the string `"-inf"`, finite values stay
    floats.
    """
    if value == NEG_INF:
        return '-inf'
    return float(value)
