"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from typing import Any

from .base_exceptions import CavityLabError
from .network_exceptions import UndefinedArithmeticError

__all__ = [
    'IndependenceViolationError',
    'InfeasibleError',
    'InfeasibleReferenceError',
    'InvalidDepthError',
    'NotATreeError',
    'RefusedTooLargeError',
]


class InfeasibleError(CavityLabError):
    """
    Error raised by the exact solvers when every assignment violates a hard constraint (i.e. evaluates to `NEG_INF`).
    """
    code = 'infeasible'


class InfeasibleReferenceError(UndefinedArithmeticError):
    """
    Error raised when the reference row of a partial cavity (action 0 or the reference action of the receiving node)
    has no feasible action for the neighbor, so that the partial cavity would be a difference of two `NEG_INF` values.
    Also raised when a cavity is requested for a node that cannot take action 0.

    May contain the extra fields `node`, `neighbor` and `action`.
    """
    code = 'infeasible_reference'


class RefusedTooLargeError(CavityLabError):
    """
    Error raised when a computation would exceed its configured budget (number of assignments for brute force, number
    of recursive calls for cavity expansion, number of branches for branch-and-bound).

    Contains the extra fields `limit` (configured budget) and `requested` (size of the refused computation, if known),
    and usually `parameter` with the name of the budget.
    """
    code = 'refused_too_large'

    def __init__(self, *, limit: int, requested: int | None = None, **kwargs: Any):
        super().__init__(limit=limit, requested=requested, **kwargs)


class NotATreeError(CavityLabError):
    """
    Error raised by the tree solver when the input network contains a cycle.
    """
    code = 'not_a_tree'


class InvalidDepthError(CavityLabError):
    """
    Error raised when a computation depth is negative or has the wrong parity (the two-phase MWIS algorithm needs an
    even depth for lower bounds and an odd depth for upper bounds).

    Contains the extra fields `depth` and `parameter`.
    """
    code = 'invalid_depth'

    def __init__(self, *, depth: int, parameter: str = 'depth', **kwargs: Any):
        super().__init__(depth=depth, parameter=parameter, **kwargs)


class IndependenceViolationError(CavityLabError):
    """
    Error raised when the MWIS engine produced a node set that is not independent in the original graph. This indicates
    a bug and is checked on every run.

    Contains the extra field `edge`.
    """
    code = 'independence_violation'
