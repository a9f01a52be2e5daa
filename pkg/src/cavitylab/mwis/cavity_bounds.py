"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math
from enum import Enum

from cavitylab.exceptions import InvalidDepthError, InvalidParamsError, InvalidViewError
from cavitylab.network import WeightedGraph
from cavitylab.oracle import BranchAndBoundLimits, max_weight_independent_set

__all__ = [
    'BoundSign',
    'c_bound',
    'c_exact',
    'parse_bound_sign',
    'suggested_depth',
]


class BoundSign(Enum):
    """
    Which of the two truncated cavity recursions to evaluate: `MINUS` starts from 0 at depth 0, `PLUS` starts from the
    node weight. For even depths `MINUS` is a lower and `PLUS` an upper bound of the exact cavity, for odd depths the
    roles are swapped.
    """
    MINUS = 'minus'
    PLUS = 'plus'


def parse_bound_sign(sign: BoundSign | str) -> BoundSign:
    try:
        return BoundSign(sign)
    except ValueError:
        raise InvalidParamsError(parameter='sign', reason="Bound sign must be 'minus' or 'plus'.") from None


def _active_mask(graph: WeightedGraph, node: int, removed: int) -> int:
    active = graph.full_mask & ~removed
    if not 0 <= node < graph.num_nodes or not active >> node & 1:
        raise InvalidViewError(node=node, reason='Node is not part of the graph.')
    return active


def c_exact(
    graph: WeightedGraph,
    node: int,
    *,
    removed: int = 0,
    limits: BranchAndBoundLimits = BranchAndBoundLimits(),
) -> float:
    """
    Exact cavity `C(i) = J_𝒢 - J_{𝒢∖{i}} >= 0` of a node in the subgraph without the nodes of the bitmask `removed`,
    computed with two branch-and-bound runs.

    `C(i) > 0` iff every maximum weight independent set contains the node.
    """
    active = _active_mask(graph, node, removed)
    with_node, _ = max_weight_independent_set(graph, active, limits=limits)
    without_node, _ = max_weight_independent_set(graph, active & ~(1 << node), limits=limits)
    return max(0.0, with_node - without_node)


class _BoundRecursion:
    def __init__(self, graph: WeightedGraph, sign: BoundSign):
        self.graph = graph
        self.sign = sign
        self.memo: dict[tuple[int, int, int], float] = {}

    def value(self, active: int, node: int, depth: int) -> float:
        if depth == 0:
            return 0.0 if self.sign is BoundSign.MINUS else self.graph.weights[node]

        key = (active, node, depth)
        cached = self.memo.get(key)
        if cached is not None:
            return cached

        remaining = active & ~(1 << node)
        total = 0.0
        for neighbor in self.graph.neighbors(node):
            if remaining >> neighbor & 1:
                total += self.value(remaining, neighbor, depth - 1)
                remaining &= ~(1 << neighbor)

        result = max(0.0, self.graph.weights[node] - total)
        self.memo[key] = result
        return result


def c_bound(
    graph: WeightedGraph,
    node: int,
    depth: int,
    sign: BoundSign | str,
    *,
    removed: int = 0,
) -> float:
    """
    Truncated cavity recursion of depth r on the subgraph without the nodes of the bitmask `removed`:

    ```
    C(i, r) = max(0, W_i - Σ_l C_{𝒢∖{i, i_1, ..., i_{l-1}}}(i_l, r - 1))
    ```

    where `i_1 < i_2 < ...` are the neighbors of i in the subgraph. At depth 0 the `MINUS` recursion returns 0 and the
    `PLUS` recursion returns `W_i`. Every level removes at least one node, so a depth of at least the number of nodes
    never reaches the base case and yields the exact cavity.

    Raises `InvalidDepthError` for negative depths.
    """
    bound_sign = parse_bound_sign(sign)
    if type(depth) is not int or depth < 0:
        raise InvalidDepthError(depth=depth, reason='Depth must be a non-negative integer.')
    active = _active_mask(graph, node, removed)
    return _BoundRecursion(graph, bound_sign).value(active, node, depth)


def suggested_depth(epsilon: float) -> int:
    """
    Heuristic depth for the two-phase algorithm at accuracy `epsilon`: `ceil(32 ln(3/ε) / ε²)`, rounded up to an even
    number. The constant is a calibration choice.
    """
    if not 0 < epsilon < 1:
        raise InvalidParamsError(parameter='epsilon', reason='Epsilon must be in (0, 1).')
    depth = math.ceil(32 * math.log(3 / epsilon) / epsilon ** 2)
    return depth + depth % 2
