"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from typing import Any

from .base_exceptions import CavityLabError

__all__ = [
    'EncodeError',
    'InvalidParamsError',
    'UnsupportedCorrelationError',
]


class InvalidParamsError(CavityLabError):
    """
    Error raised when a model, graph or distribution is specified with invalid parameters.

    Contains the extra field `parameter` with the name of the invalid parameter.
    """
    code = 'invalid_params'

    def __init__(self, *, parameter: str, **kwargs: Any):
        super().__init__(parameter=parameter, **kwargs)


class EncodeError(CavityLabError):
    """
    Error raised when a combinatorial problem cannot be encoded as a decision network (e.g. a clause references an
    unknown variable), or when a decision network is not the encoding it is expected to be.
    """
    code = 'encode_error'


class UnsupportedCorrelationError(CavityLabError):
    """
    Error raised by the coupling parameter calculator when the correlation coefficient `C` of a correlated Gaussian
    model is not strictly smaller than 1.

    Contains the extra field `correlation`.
    """
    code = 'unsupported_correlation'

    def __init__(self, *, correlation: float, **kwargs: Any):
        super().__init__(correlation=correlation, **kwargs)
