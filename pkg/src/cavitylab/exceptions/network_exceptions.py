"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from typing import Any

from .base_exceptions import CavityLabError

__all__ = [
    'InvalidAssignmentError',
    'InvalidNetworkError',
    'InvalidViewError',
    'ParseError',
    'UndefinedArithmeticError',
]


class UndefinedArithmeticError(CavityLabError):
    """
    Error raised when an extended real subtraction has no defined value, i.e. when the subtrahend is `NEG_INF`.
    """
    code = 'undefined_arithmetic'


class InvalidNetworkError(CavityLabError):
    """
    Error raised when a `DecisionNetwork` is constructed from inconsistent data (self-loops, duplicate edges, node ids
    out of range, wrong table shapes or non-finite node potentials).

    May contain the extra fields `node` and `edge` pointing at the offending element.
    """
    code = 'invalid_network'


class InvalidAssignmentError(CavityLabError):
    """
    Error raised when an assignment does not fit the network it is evaluated against, either because its length
    differs from the node count or because an action is outside of `[0, T)`.
    """
    code = 'invalid_assignment'

    def __init__(self, *, expected_length: int | None = None, actual_length: int | None = None, **kwargs: Any):
        super().__init__(expected_length=expected_length, actual_length=actual_length, **kwargs)


class InvalidViewError(CavityLabError):
    """
    Error raised by `SubnetworkView` operations that reference a node which is not (or no longer) part of the view.

    Contains the extra field `node`.
    """
    code = 'invalid_view'

    def __init__(self, *, node: int, **kwargs: Any):
        super().__init__(node=node, **kwargs)


class ParseError(CavityLabError):
    """
    Error raised when an instance file or weighted graph file cannot be parsed.

    Contains the extra field `location`, a path into the JSON document (e.g. `edges[2].table[1][0]`) that points at the
    first offending element, and, if the input failed schema validation, the field `validation_error` with the nested
    validation error as a dictionary.
    """
    code = 'parse_error'

    def __init__(self, *, location: str | None = None, validation_error: dict[str, Any] | None = None, **kwargs: Any):
        super().__init__(location=location, validation_error=validation_error, **kwargs)
