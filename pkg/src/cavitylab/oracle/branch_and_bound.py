"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import logging
from dataclasses import dataclass

from cavitylab.exceptions import RefusedTooLargeError
from cavitylab.network import WeightedGraph, nodes_of
from .exact_solution import ExactSolution

__all__ = [
    'BranchAndBoundLimits',
    'max_independent_set_size',
    'max_weight_independent_set',
    'solve_mwis_bnb',
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BranchAndBoundLimits:
    """
    Size guard of the exact MWIS solver: graphs with more than `max_nodes` nodes are refused, and a search is aborted
    after `max_branches` branching steps.
    """
    max_nodes: int = 200
    max_branches: int = 10 ** 7


class _Search:
    """
    Depth-first branch-and-bound over node bitmasks with an incumbent solution. Nodes without active neighbors are
    always taken, a node whose only active neighbor is not heavier is taken as well. Otherwise the search branches on a
    node of maximum active degree, including it first.
    """

    def __init__(self, graph: WeightedGraph, limits: BranchAndBoundLimits):
        self.graph = graph
        self.limits = limits
        self.branches = 0
        self.best_weight = -1.0
        self.best_mask = 0

    def run(self, active: int) -> tuple[float, int]:
        self.best_weight = -1.0
        self.best_mask = 0
        self._search(active, 0.0, 0)
        return self.best_weight, self.best_mask

    def _charge(self) -> None:
        self.branches += 1
        if self.branches > self.limits.max_branches:
            logger.warning('Branch-and-bound aborted after %d branches.', self.limits.max_branches)
            raise RefusedTooLargeError(
                limit=self.limits.max_branches,
                parameter='max_branches',
                reason='Branch-and-bound exceeded its branch budget.',
            )

    def _reduce(self, active: int, weight: float, chosen: int) -> tuple[int, float, int]:
        changed = True
        while changed:
            changed = False
            for node in nodes_of(active):
                if not active >> node & 1:
                    continue
                neighbors = self.graph.neighbor_mask(node) & active
                if neighbors == 0 or (
                    neighbors & (neighbors - 1) == 0
                    and self.graph.weights[node] >= self.graph.weights[neighbors.bit_length() - 1]
                ):
                    active &= ~((1 << node) | neighbors)
                    weight += self.graph.weights[node]
                    chosen |= 1 << node
                    changed = True
        return active, weight, chosen

    def _search(self, active: int, weight: float, chosen: int) -> None:
        self._charge()
        active, weight, chosen = self._reduce(active, weight, chosen)

        remaining = sum(self.graph.weights[node] for node in nodes_of(active))
        if weight + remaining <= self.best_weight:
            return
        if active == 0:
            self.best_weight = weight
            self.best_mask = chosen
            return

        pivot = max(nodes_of(active), key=lambda node: (self.graph.neighbor_mask(node) & active).bit_count())
        self._search(
            active & ~((1 << pivot) | self.graph.neighbor_mask(pivot)),
            weight + self.graph.weights[pivot],
            chosen | 1 << pivot,
        )
        self._search(active & ~(1 << pivot), weight, chosen)


def max_weight_independent_set(
    graph: WeightedGraph,
    active: int | None = None,
    *,
    limits: BranchAndBoundLimits = BranchAndBoundLimits(),
) -> tuple[float, int]:
    """
    Returns `(J, mask)`: the weight of a maximum weight independent set of the subgraph induced by the bitmask `active`
    (default: all nodes) and the bitmask of such a set.

    The weight is summed with `math.fsum` over the chosen nodes, so the same set always yields the bit-identical
    weight regardless of the order in which it was found.

    Raises `RefusedTooLargeError` if the graph has more than `limits.max_nodes` nodes or the search exceeds
    `limits.max_branches` branches.
    """
    if graph.num_nodes > limits.max_nodes:
        raise RefusedTooLargeError(
            limit=limits.max_nodes,
            requested=graph.num_nodes,
            parameter='max_nodes',
            reason='Graph is too large for the exact MWIS solver.',
        )
    if active is None:
        active = graph.full_mask
    _, mask = _Search(graph, limits).run(active)
    return graph.total_weight(nodes_of(mask)), mask


def solve_mwis_bnb(
    graph: WeightedGraph,
    *,
    check_unique: bool = True,
    limits: BranchAndBoundLimits = BranchAndBoundLimits(),
) -> ExactSolution:
    """
    Solves maximum weight independent set exactly. The argmax is the indicator vector of the chosen set.

    With `check_unique`, the optimum is unique iff removing any chosen node strictly lowers the optimum and no node of
    weight zero can be added to the chosen set.
    """
    optimum, mask = max_weight_independent_set(graph, limits=limits)
    chosen = nodes_of(mask)

    unique: bool | None = None
    if check_unique:
        unique = all(
            max_weight_independent_set(graph, graph.full_mask & ~(1 << node), limits=limits)[0] < optimum
            for node in chosen
        ) and not any(
            graph.weights[node] == 0 and not mask >> node & 1 and graph.neighbor_mask(node) & mask == 0
            for node in range(graph.num_nodes)
        )

    return ExactSolution(
        optimum=optimum,
        argmax=tuple(int(mask >> node & 1) for node in range(graph.num_nodes)),
        unique=unique,
    )


def max_independent_set_size(graph: WeightedGraph, *, limits: BranchAndBoundLimits = BranchAndBoundLimits()) -> int:
    """
    Returns the size of a maximum cardinality independent set (MWIS with unit weights).
    """
    unit_graph = graph.with_weights([1.0] * graph.num_nodes)
    _, mask = max_weight_independent_set(unit_graph, limits=limits)
    return mask.bit_count()
