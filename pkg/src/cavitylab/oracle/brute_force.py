"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from cavitylab.exceptions import InfeasibleError, InfeasibleReferenceError, RefusedTooLargeError
from cavitylab.network import NEG_INF, CavityVector, DecisionNetwork, ExtReal, SubnetworkView, as_view, evaluate
from .exact_solution import ExactSolution

__all__ = [
    'BruteForceLimits',
    'cavity_exact',
    'conditional_optima',
    'solve_brute',
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BruteForceLimits:
    """
    Size guard of the brute-force solvers: at most `max_assignments` (default 2^26) assignments are enumerated,
    in chunks of `chunk_size` assignments.
    """
    max_assignments: int = 2 ** 26
    chunk_size: int = 2 ** 16


@dataclass(frozen=True)
class _Maximum:
    value: float
    index: int
    count: int


class _Enumeration:
    """
    Vectorized enumeration of all assignments of the free nodes of a view, optionally with one node pinned to an
    action. Assignment number `k` encodes the actions of the free nodes as base-T digits, the free node with the
    smallest id being the most significant digit. Enumerating in increasing order of `k` therefore visits assignments
    in lexicographic order.
    """

    def __init__(self, view: SubnetworkView, pinned_node: int | None = None, pinned_action: int = 0):
        self.num_actions = view.num_actions
        self.free_nodes = tuple(node for node in view.active_nodes() if node != pinned_node)
        local_index = {node: index for index, node in enumerate(self.free_nodes)}

        self.constant = 0.0
        self.unary = np.array([view.effective_potential(node) for node in self.free_nodes], dtype=np.float64)
        self.unary = self.unary.reshape(len(self.free_nodes), self.num_actions)
        self.pairs: list[tuple[int, int, npt.NDArray[np.float64]]] = []

        if pinned_node is not None:
            self.constant = view.effective_potential(pinned_node)[pinned_action]
        for u, v in view.edges():
            table = np.array(view.base.edge_table(u, v), dtype=np.float64)
            if u == pinned_node:
                self.unary[local_index[v]] += table[pinned_action, :]
            elif v == pinned_node:
                self.unary[local_index[u]] += table[:, pinned_action]
            else:
                self.pairs.append((local_index[u], local_index[v], table))

        num_free = len(self.free_nodes)
        self.size = self.num_actions ** num_free
        self.place_values = self.num_actions ** np.arange(num_free - 1, -1, -1, dtype=np.int64)

    def digits(self, indices: npt.NDArray[np.int64]) -> npt.NDArray[np.int64]:
        return (indices[:, None] // self.place_values[None, :]) % self.num_actions

    def values(self, start: int, stop: int) -> npt.NDArray[np.float64]:
        digits = self.digits(np.arange(start, stop, dtype=np.int64))
        total = np.full(stop - start, self.constant, dtype=np.float64)
        for index in range(len(self.free_nodes)):
            total += self.unary[index, digits[:, index]]
        for a, b, table in self.pairs:
            total += table[digits[:, a], digits[:, b]]
        return total

    def maximize(self, chunk_size: int) -> _Maximum:
        best = _Maximum(value=NEG_INF, index=0, count=0)
        for start in range(0, self.size, chunk_size):
            values = self.values(start, min(start + chunk_size, self.size))
            chunk_max = float(values.max())
            chunk_count = int(np.count_nonzero(values == chunk_max))
            if chunk_max > best.value:
                best = _Maximum(value=chunk_max, index=start + int(values.argmax()), count=chunk_count)
            elif chunk_max == best.value:
                best = _Maximum(value=best.value, index=best.index, count=best.count + chunk_count)
        return best

    def assignment(self, index: int, base_size: int) -> list[int]:
        actions = [0] * base_size
        digits = self.digits(np.array([index], dtype=np.int64))[0]
        for node, action in zip(self.free_nodes, digits):
            actions[node] = int(action)
        return actions


def _check_size(view: SubnetworkView, limits: BruteForceLimits) -> None:
    requested = view.num_actions ** view.num_nodes
    if requested > limits.max_assignments:
        logger.warning('Brute force refused: %d assignments requested, limit is %d.', requested, limits.max_assignments)
        raise RefusedTooLargeError(
            limit=limits.max_assignments,
            requested=requested,
            parameter='max_assignments',
            reason='Too many assignments for brute-force enumeration.',
        )


def solve_brute(
    network: DecisionNetwork | SubnetworkView,
    *,
    limits: BruteForceLimits = BruteForceLimits(),
) -> ExactSolution:
    """
    Solves a (small) network exactly by enumerating all `T^n` assignments.

    Ties are broken toward the lexicographically smallest assignment, in which case `unique` is False. For a view, the
    argmax has one entry per node of the base network, removed nodes get action 0.

    Raises `RefusedTooLargeError` if `T^n` exceeds `limits.max_assignments` and `InfeasibleError` if every assignment
    violates a hard constraint.
    """
    view = as_view(network)
    _check_size(view, limits)

    enumeration = _Enumeration(view)
    best = enumeration.maximize(limits.chunk_size)
    if best.value == NEG_INF:
        raise InfeasibleError(reason='Every assignment violates a hard constraint.')

    argmax = tuple(enumeration.assignment(best.index, view.base.num_nodes))
    return ExactSolution(optimum=evaluate(view, argmax), argmax=argmax, unique=best.count == 1)


def conditional_optima(
    network: DecisionNetwork | SubnetworkView,
    node: int,
    *,
    limits: BruteForceLimits = BruteForceLimits(),
) -> tuple[ExtReal, ...]:
    """
    Returns `J_{𝒢,v}(x) = max { F(a) : a_v = x }` for every action x, by enumeration.
    """
    view = as_view(network)
    view.ensure_contains(node)
    _check_size(view, limits)
    return tuple(
        _Enumeration(view, pinned_node=node, pinned_action=action).maximize(limits.chunk_size).value
        for action in range(view.num_actions)
    )


def cavity_exact(
    network: DecisionNetwork | SubnetworkView,
    node: int,
    *,
    limits: BruteForceLimits = BruteForceLimits(),
) -> CavityVector:
    """
    Computes the exact cavity vector `B(x) = J_{𝒢,v}(x) - J_{𝒢,v}(0)` of a node by enumeration. `B(0)` is always 0.

    Entries are `NEG_INF` where the conditional optimum is `NEG_INF` but the reference optimum (x = 0) is not. Raises
    `InfeasibleError` if all conditional optima are `NEG_INF` and `InfeasibleReferenceError` if only the reference
    optimum is.
    """
    optima = conditional_optima(network, node, limits=limits)
    if optima[0] == NEG_INF:
        if all(value == NEG_INF for value in optima):
            raise InfeasibleError(reason='Every assignment violates a hard constraint.')
        raise InfeasibleReferenceError(
            node=node,
            reason='Cavity is undefined: no feasible assignment with action 0 at the node.',
        )
    return tuple(0.0 if action == 0 else value - optima[0] for action, value in enumerate(optima))
