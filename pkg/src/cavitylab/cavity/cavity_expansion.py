"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import logging

from cavitylab.exceptions import (
    InfeasibleReferenceError,
    InvalidAssignmentError,
    InvalidDepthError,
    RefusedTooLargeError,
)
from cavitylab.network import NEG_INF, CavityVector, DecisionNetwork, ExtReal, SubnetworkView, as_view
from .boundary_conditions import BoundaryCondition, ZeroBoundary
from .modified_network import modified_network
from .partial_cavity import mu

__all__ = [
    'CallBudget',
    'DEFAULT_MAX_CALLS',
    'ce',
    'ce_full',
    'ce_vector',
]

logger = logging.getLogger(__name__)

DEFAULT_MAX_CALLS = 10 ** 8


class CallBudget:
    """
    Counts the recursive calls of a cavity expansion and refuses to go beyond `max_calls`.

    A budget can be passed to several computations in a row to cap their total cost, and `calls` can be read
    afterwards to measure it. Budgets are not thread-safe, every thread needs its own.
    """

    max_calls: int
    calls: int

    def __init__(self, max_calls: int = DEFAULT_MAX_CALLS):
        self.max_calls = max_calls
        self.calls = 0

    def __repr__(self) -> str:
        return f'CallBudget(max_calls={self.max_calls}, calls={self.calls})'

    def charge(self) -> None:
        self.calls += 1
        if self.calls > self.max_calls:
            logger.warning('Cavity expansion exceeded its budget of %d calls.', self.max_calls)
            raise RefusedTooLargeError(
                limit=self.max_calls,
                parameter='max_calls',
                reason='Cavity expansion exceeded the call budget.',
            )


def _check_arguments(view: SubnetworkView, node: int, depth: int) -> None:
    view.ensure_contains(node)
    if depth < 0:
        raise InvalidDepthError(depth=depth, reason='Computation depth must be non-negative.')


def _reference_action(view: SubnetworkView, node: int) -> int | None:
    """
    Returns the smallest action with a finite effective potential, None if there is none.
    """
    for action, value in enumerate(view.effective_potential(node)):
        if value != NEG_INF:
            return action
    return None


def _neighbor_cavity(
    view: SubnetworkView,
    neighbor: int,
    depth: int,
    boundary: BoundaryCondition,
    budget: CallBudget,
) -> CavityVector:
    # Relative to the first locally feasible action, μ is invariant under constant shifts of the cavity vector
    reference = _reference_action(view, neighbor)
    if reference is None:
        return (NEG_INF,) * view.num_actions
    return tuple(
        0.0 if neighbor_action == reference
        else _expand(view, neighbor, depth, neighbor_action, boundary, budget, reference)
        for neighbor_action in range(view.num_actions)
    )


def _expand(
    view: SubnetworkView,
    node: int,
    depth: int,
    action: int,
    boundary: BoundaryCondition,
    budget: CallBudget,
    reference: int = 0,
) -> ExtReal:
    """
    Computes `CE[𝒢, u, r, x]` relative to the reference action instead of action 0, i.e. the approximation of
    `B(x) - B(reference)`.
    """
    budget.charge()
    if action == reference:
        return 0.0
    if depth == 0:
        return boundary(view, node, action, reference)

    potential = view.effective_potential(node)
    if potential[reference] == NEG_INF:
        raise InfeasibleReferenceError(
            node=node,
            reason=f'Effective potential of reference action {reference} is NEG_INF.',
        )
    if potential[action] == NEG_INF:
        return NEG_INF
    result = potential[action] - potential[reference]

    for position, neighbor in enumerate(view.neighbors(node), start=1):
        subnetwork = modified_network(view, node, position, action, reference=reference)
        cavity = _neighbor_cavity(subnetwork, neighbor, depth - 1, boundary, budget)
        try:
            result += mu(view.base.edge_table(node, neighbor), action, cavity, reference=reference)
        except InfeasibleReferenceError as error:
            raise InfeasibleReferenceError(node=node, neighbor=neighbor, reason=error.reason) from None
    return result


def ce(
    network: DecisionNetwork | SubnetworkView,
    node: int,
    depth: int,
    action: int,
    boundary: BoundaryCondition | None = None,
    *,
    budget: CallBudget | None = None,
) -> ExtReal:
    """
    Cavity expansion `CE[𝒢, u, r, x]`: depth-bounded approximation of the cavity `B_{𝒢,u}(x)`.

    - depth 0 returns the boundary condition (default: `ZeroBoundary`),
    - a node without neighbors returns its potential gap `Φ_u(x) - Φ_u(0)`,
    - otherwise returns `Φ_u(x) - Φ_u(0) + Σ_j μ(x, CE[𝒢(u, j, x), v_j, r - 1, ·])` over the neighbors v_j of u in
      ascending order of node id.

    The result for action 0 is always 0. No intermediate results are cached, the number of recursive calls grows
    like `O((ΔT)^r)`. Pass a `CallBudget` to cap or to measure it (default: a fresh budget of 10^8 calls).

    Inside the recursion, the cavity vectors of neighbors are computed relative to their smallest action with a finite
    effective potential, so hard constraints that forbid action 0 further down do not make the result undefined.

    Raises `InfeasibleReferenceError` if action 0 of the node is forbidden or a partial cavity on the way is
    undefined, `RefusedTooLargeError` if the budget is exceeded and `InvalidDepthError` for negative depths.
    """
    view = as_view(network)
    _check_arguments(view, node, depth)
    if not 0 <= action < view.num_actions:
        raise InvalidAssignmentError(reason=f'Action must be in [0, {view.num_actions}).', node=node)
    return _expand(view, node, depth, action, boundary or ZeroBoundary(), budget or CallBudget())


def ce_vector(
    network: DecisionNetwork | SubnetworkView,
    node: int,
    depth: int,
    boundary: BoundaryCondition | None = None,
    *,
    budget: CallBudget | None = None,
) -> CavityVector:
    """
    Returns `CE[𝒢, u, r, x]` for all actions x. All entries share one budget.
    """
    view = as_view(network)
    _check_arguments(view, node, depth)
    budget = budget or CallBudget()
    boundary = boundary or ZeroBoundary()
    return tuple(_expand(view, node, depth, action, boundary, budget) for action in range(view.num_actions))


def ce_full(
    network: DecisionNetwork | SubnetworkView,
    node: int,
    boundary: BoundaryCondition | None = None,
    *,
    budget: CallBudget | None = None,
) -> CavityVector:
    """
    Runs the cavity expansion without depth cap, i.e. until every subnetwork in the recursion has run out of
    neighbors. Each recursive call removes one node, so a depth equal to the number of nodes is never reached and the
    boundary condition is never used. The result equals the exact cavity vector.

    Only feasible for small networks, the cost grows with the number of self-avoiding paths starting at the node.
    """
    view = as_view(network)
    return ce_vector(view, node, view.num_nodes, boundary, budget=budget)
