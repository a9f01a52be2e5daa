"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from cavitylab.network import WeightedGraph

__all__ = [
    'greedy_mis',
]


def greedy_mis(graph: WeightedGraph) -> tuple[int, ...]:
    """
    Greedy maximal independent set: takes the smallest remaining node, removes its neighbors, repeats. Weights are
    ignored. The result has at least `n / (Δ + 1)` nodes, which is checked.
    """
    blocked = 0
    chosen: list[int] = []
    for node in range(graph.num_nodes):
        if blocked >> node & 1:
            continue
        chosen.append(node)
        blocked |= 1 << node | graph.neighbor_mask(node)

    assert len(chosen) * (graph.max_degree() + 1) >= graph.num_nodes
    return tuple(chosen)
