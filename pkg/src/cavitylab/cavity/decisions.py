"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from cavitylab.exceptions import CavityLabError
from cavitylab.helpers import ordered_map
from cavitylab.network import (
    Assignment,
    CavityVector,
    DecisionNetwork,
    ExtReal,
    SubnetworkView,
    as_view,
    evaluate,
    format_ext_real,
)
from .boundary_conditions import BoundaryCondition
from .cavity_expansion import DEFAULT_MAX_CALLS, CallBudget, ce_full, ce_vector

__all__ = [
    'CeDecisions',
    'CeResult',
    'ce_decide_all',
    'ce_result',
    'decide',
]

logger = logging.getLogger(__name__)


def decide(estimates: Sequence[ExtReal]) -> int:
    """
    Returns the action with the largest estimate, ties broken toward the smallest action index.
    """
    best_action = 0
    for action, value in enumerate(estimates):
        if value > estimates[best_action]:
            best_action = action
    return best_action


@dataclass(frozen=True)
class CeResult:
    """
    Cavity expansion estimates of one node: `estimates[x] = CE[𝒢, u, r, x]` and the resulting decision
    `argmax_x estimates[x]`. A depth of None means the expansion ran without depth cap (`ce_full`).
    """
    node: int
    estimates: CavityVector
    depth: int | None
    decision: int

    def to_dict(self) -> dict[str, Any]:
        return {
            'node': self.node,
            'depth': self.depth,
            'estimates': [format_ext_real(value) for value in self.estimates],
            'decision': self.decision,
        }


@dataclass(frozen=True)
class CeDecisions:
    """
    Result of running the cavity expansion on every node of a network.

    `results` has one entry per active node (in ascending order), nodes whose computation failed are listed in
    `errors` instead (node id → error dictionary). If no node failed, `assignment` contains the decisions (0 for
    removed nodes of a view) and `total` its objective value, which may be `NEG_INF` for hard-constrained models.
    Otherwise both are None.
    """
    results: tuple[CeResult, ...]
    errors: dict[int, dict[str, Any]]
    assignment: Assignment | None
    total: ExtReal | None

    def to_dict(self) -> dict[str, Any]:
        return {
            'results': [result.to_dict() for result in self.results],
            'errors': {str(node): error for node, error in self.errors.items()},
            'assignment': list(self.assignment) if self.assignment is not None else None,
            'total': format_ext_real(self.total) if self.total is not None else None,
        }


def ce_result(
    network: DecisionNetwork | SubnetworkView,
    node: int,
    depth: int | None,
    boundary: BoundaryCondition | None = None,
    *,
    max_calls: int = DEFAULT_MAX_CALLS,
) -> CeResult:
    """
    Computes the estimates of all actions of one node and its decision. A depth of None runs `ce_full()`.
    """
    budget = CallBudget(max_calls)
    if depth is None:
        estimates = ce_full(network, node, boundary, budget=budget)
    else:
        estimates = ce_vector(network, node, depth, boundary, budget=budget)
    return CeResult(node=node, estimates=estimates, depth=depth, decision=decide(estimates))


def ce_decide_all(
    network: DecisionNetwork | SubnetworkView,
    depth: int | None,
    boundary: BoundaryCondition | None = None,
    *,
    max_calls: int = DEFAULT_MAX_CALLS,
    threads: int | None = None,
) -> CeDecisions:
    """
    Runs the cavity expansion independently on every node and combines the decisions into an assignment.

    Root computations are independent and run in parallel (up to `threads` worker threads), each with its own call
    budget of `max_calls`. Errors of single nodes are collected and do not abort the other computations.
    """
    view = as_view(network)

    def run(node: int) -> CeResult | CavityLabError:
        try:
            return ce_result(view, node, depth, boundary, max_calls=max_calls)
        except CavityLabError as error:
            return error

    nodes = view.active_nodes()
    outcomes = ordered_map(run, nodes, threads=threads)

    results: list[CeResult] = []
    errors: dict[int, dict[str, Any]] = {}
    for node, outcome in zip(nodes, outcomes):
        if isinstance(outcome, CeResult):
            results.append(outcome)
        else:
            logger.warning('Cavity expansion failed at node %d: %r', node, outcome)
            errors[node] = outcome.to_dict()

    if errors:
        return CeDecisions(results=tuple(results), errors=errors, assignment=None, total=None)

    actions = [0] * view.base.num_nodes
    for result in results:
        actions[result.node] = result.decision
    assignment = tuple(actions)
    return CeDecisions(results=tuple(results), errors={}, assignment=assignment, total=evaluate(view, assignment))
