"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math
from collections.abc import Iterable, Sequence

import networkx as nx
import numpy as np

from cavitylab.exceptions import InvalidNetworkError
from .decision_network import EdgeKey

__all__ = [
    'WeightedGraph',
    'mask_of',
    'nodes_of',
]


def mask_of(nodes: Iterable[int]) -> int:
    """
    Returns the bitmask of a set of node ids (bit i set iff node i is in the set).
    """
    mask = 0
    for node in nodes:
        mask |= 1 << node
    return mask


def nodes_of(mask: int) -> tuple[int, ...]:
    """
    Returns the node ids of a bitmask in ascending order.
    """
    nodes = []
    node = 0
    while mask:
        if mask & 1:
            nodes.append(node)
        mask >>= 1
        node += 1
    return tuple(nodes)


class WeightedGraph:
    """
    Immutable simple undirected graph with a non-negative weight per node, the input of the maximum weight independent
    set engine.

    Node sets are frequently passed around as integer bitmasks (see `mask_of()` and `nodes_of()`), which makes
    "graph minus some nodes" as cheap as an integer operation.
    """

    weights: tuple[float, ...]

    _edges: tuple[EdgeKey, ...]
    _neighbors: tuple[tuple[int, ...], ...]
    _neighbor_masks: tuple[int, ...]

    def __init__(self, *, weights: Sequence[float] | np.ndarray, edges: Iterable[tuple[int, int]] = ()):
        """
        Creates a `WeightedGraph`.

        Parameters:
            `weights`: Sequence of finite, non-negative node weights (one per node)
            `edges`: Iterable of node id pairs (either orientation)

        Raises `InvalidNetworkError` on negative or non-finite weights, self-loops, duplicate edges
        and unknown node ids.
        """
        weight_list = [float(weight) for weight in weights]
        for node, weight in enumerate(weight_list):
            if not math.isfinite(weight) or weight < 0:
                raise InvalidNetworkError(reason='Node weights must be finite and non-negative.', node=node)

        num_nodes = len(weight_list)
        edge_set: set[EdgeKey] = set()
        for u, v in edges:
            if not (0 <= u < num_nodes and 0 <= v < num_nodes):
                raise InvalidNetworkError(reason='Edge endpoint is not a valid node id.', edge=[u, v])
            if u == v:
                raise InvalidNetworkError(reason='Self-loops are not allowed.', edge=[u, v])
            key = (int(min(u, v)), int(max(u, v)))
            if key in edge_set:
                raise InvalidNetworkError(reason='Duplicate edge.', edge=list(key))
            edge_set.add(key)

        neighbor_lists: list[list[int]] = [[] for _ in range(num_nodes)]
        for u, v in edge_set:
            neighbor_lists[u].append(v)
            neighbor_lists[v].append(u)

        self.weights = tuple(weight_list)
        self._edges = tuple(sorted(edge_set))
        self._neighbors = tuple(tuple(sorted(neighbors)) for neighbors in neighbor_lists)
        self._neighbor_masks = tuple(mask_of(neighbors) for neighbors in self._neighbors)

    def __repr__(self) -> str:
        return f'WeightedGraph(num_nodes={self.num_nodes}, num_edges={self.num_edges})'

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.weights == other.weights and self._edges == other._edges

    @classmethod
    def from_networkx(cls, graph: nx.Graph, weights: Sequence[float] | np.ndarray) -> 'WeightedGraph':
        """
        Creates a `WeightedGraph` from a networkx graph whose nodes are the integers `0, ..., n-1`.
        """
        return cls(weights=weights, edges=[(int(u), int(v)) for u, v in graph.edges()])

    @property
    def num_nodes(self) -> int:
        return len(self.weights)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[EdgeKey, ...]:
        return self._edges

    @property
    def full_mask(self) -> int:
        return (1 << self.num_nodes) - 1

    def neighbors(self, node: int) -> tuple[int, ...]:
        return self._neighbors[node]

    def neighbor_mask(self, node: int) -> int:
        return self._neighbor_masks[node]

    def degree(self, node: int) -> int:
        return len(self._neighbors[node])

    def max_degree(self) -> int:
        return max((len(neighbors) for neighbors in self._neighbors), default=0)

    def with_weights(self, weights: Sequence[float] | np.ndarray) -> 'WeightedGraph':
        """
        Returns a graph with the same edges and new weights.
        """
        if len(weights) != self.num_nodes:
            raise InvalidNetworkError(reason=f'Expected {self.num_nodes} weights, got {len(weights)}.')
        return WeightedGraph(weights=weights, edges=self._edges)

    def total_weight(self, nodes: Iterable[int]) -> float:
        return math.fsum(self.weights[node] for node in nodes)

    def find_conflict(self, nodes: Iterable[int]) -> EdgeKey | None:
        """
        Scans all edges and returns the first edge with both endpoints in the node set, or None if the set is
        independent.
        """
        node_set = set(nodes)
        for u, v in self._edges:
            if u in node_set and v in node_set:
                return u, v
        return None

    def is_independent(self, nodes: Iterable[int]) -> bool:
        return self.find_conflict(nodes) is None

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.num_nodes))
        graph.add_edges_from(self._edges)
        return graph
