"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from collections.abc import Sequence

import numpy as np

from cavitylab.exceptions import InvalidAssignmentError
from .decision_network import Assignment, DecisionNetwork
from .extended_real import ExtReal, ext_add
from .subnetwork_view import SubnetworkView, as_view

__all__ = [
    'evaluate',
    'validate_assignment',
]


def validate_assignment(network: DecisionNetwork | SubnetworkView, assignment: Sequence[int]) -> Assignment:
    """
    Checks that an assignment has one action in `[0, T)` per node of the base network and returns it as a tuple of
    integers. Raises `InvalidAssignmentError` otherwise.
    """
    view = as_view(network)
    expected_length = view.base.num_nodes
    if len(assignment) != expected_length:
        raise InvalidAssignmentError(expected_length=expected_length, actual_length=len(assignment))

    actions = []
    for node, action in enumerate(assignment):
        if not isinstance(action, (int, np.integer)) or not 0 <= action < view.num_actions:
            raise InvalidAssignmentError(reason=f'Action must be an integer in [0, {view.num_actions}).', node=node)
        actions.append(int(action))
    return tuple(actions)


def evaluate(network: DecisionNetwork | SubnetworkView, assignment: Sequence[int]) -> ExtReal:
    """
    Returns the objective `F(a)` of an assignment: the sum of all (effective) node potentials and all edge table entries
    selected by the assignment. The result is `NEG_INF` if and only if a hard constraint is violated.

    For a view, the assignment still has one entry per node of the base network, entries of removed nodes are ignored.
    """
    view = as_view(network)
    actions = validate_assignment(view, assignment)

    terms: list[ExtReal] = [view.effective_potential(node)[actions[node]] for node in view.active_nodes()]
    terms.extend(view.base.edge_table(u, v)[actions[u]][actions[v]] for u, v in view.edges())
    return ext_add(*terms)
