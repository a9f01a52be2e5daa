"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from .base_exceptions import CavityLabError
from .meta_exceptions import InvalidOptionException
from .model_exceptions import (
    EncodeError,
    InvalidParamsError,
    UnsupportedCorrelationError,
)
from .network_exceptions import (
    InvalidAssignmentError,
    InvalidNetworkError,
    InvalidViewError,
    ParseError,
    UndefinedArithmeticError,
)
from .solver_exceptions import (
    IndependenceViolationError,
    InfeasibleError,
    InfeasibleReferenceError,
    InvalidDepthError,
    NotATreeError,
    RefusedTooLargeError,
)

__all__ = [
    'CavityLabError',
    'EncodeError',
    'IndependenceViolationError',
    'InfeasibleError',
    'InfeasibleReferenceError',
    'InvalidAssignmentError',
    'InvalidDepthError',
    'InvalidNetworkError',
    'InvalidOptionException',
    'InvalidParamsError',
    'InvalidViewError',
    'NotATreeError',
    'ParseError',
    'RefusedTooLargeError',
    'UndefinedArithmeticError',
    'UnsupportedCorrelationError',
]
