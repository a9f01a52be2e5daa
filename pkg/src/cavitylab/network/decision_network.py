"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from collections.abc import Iterable, Iterator
from typing import Any, TypeAlias

import networkx as nx
import numpy as np
import numpy.typing as npt

from cavitylab.exceptions import InvalidNetworkError
from .extended_real import NEG_INF

__all__ = [
    'Assignment',
    'DecisionNetwork',
    'EdgeKey',
    'OrientedTable',
]

# Vector of actions, one entry per node of the base network
Assignment: TypeAlias = tuple[int, ...]

# Edge key (u, v) with u < v
EdgeKey: TypeAlias = tuple[int, int]

# Edge table as nested tuples, row index = action of the first node
OrientedTable: TypeAlias = tuple[tuple[float, ...], ...]


class DecisionNetwork:
    """
    Immutable decision network: a simple undirected graph with a potential vector `Φ_v` of length `T` per node and an
    interaction table `Φ_{u,v}` of shape `T×T` per edge. The objective of an assignment `x` is

    ```
    F(x) = Σ_{(u,v) ∈ E} Φ_{u,v}(x_u, x_v) + Σ_{v ∈ V} Φ_v(x_v)
    ```

    Node potentials must be finite. Edge tables may contain `NEG_INF` to model hard constraints.

    Only one table is stored per edge, for the key `(u, v)` with `u < v` and row index = action of `u`. Access in the
    other direction (`edge_table(v, u)`) returns the transposed table, i.e. `Φ_{v,u}(y, x) = Φ_{u,v}(x, y)`.

    Neighbors are always reported in ascending order of node id, which is the neighbor order used by every algorithm
    in this package.

    Example:

    ```
    # Maximum weight independent set on K2 with weights 2 and 3
    network = DecisionNetwork(
        num_actions=2,
        node_potentials=[[0, 2], [0, 3]],
        edges=[(0, 1, [[0, 0], [0, NEG_INF]])],
    )
    ```
    """

    num_actions: int
    node_potentials: npt.NDArray[np.float64]

    _edge_tables: dict[EdgeKey, npt.NDArray[np.float64]]
    _neighbors: tuple[tuple[int, ...], ...]

    # Plain Python copies of the tables, used in the recursive hot paths where numpy scalars are slow
    _potential_rows: tuple[tuple[float, ...], ...]
    _oriented_tables: dict[tuple[int, int], OrientedTable]

    def __init__(
        self,
        *,
        num_actions: int,
        node_potentials: npt.ArrayLike,
        edges: Iterable[tuple[int, int, npt.ArrayLike]] = (),
    ):
        """
        Creates a `DecisionNetwork`.

        Parameters:
            `num_actions`: Integer T >= 2, size of the action set {0, ..., T-1}
            `node_potentials`: Array-like of shape (n, T) with finite values
            `edges`: Iterable of `(u, v, table)` with a T×T array-like table, row index = action of `u` (either
                orientation is accepted, tables are stored for `u < v`)

        Raises `InvalidNetworkError` on inconsistent input.
        """
        if type(num_actions) is not int or num_actions < 2:
            raise InvalidNetworkError(reason='The number of actions must be an integer >= 2.', parameter='num_actions')

        potentials = np.array(node_potentials, dtype=np.float64)
        if potentials.size == 0:
            potentials = potentials.reshape(0, num_actions)
        if potentials.ndim != 2 or potentials.shape[1] != num_actions:
            raise InvalidNetworkError(
                reason=f'Node potentials must have shape (n, {num_actions}).',
                parameter='node_potentials',
            )
        non_finite = np.flatnonzero(~np.isfinite(potentials).all(axis=1))
        if len(non_finite) > 0:
            raise InvalidNetworkError(reason='Node potentials must be finite.', node=int(non_finite[0]))

        num_nodes = potentials.shape[0]
        tables: dict[EdgeKey, npt.NDArray[np.float64]] = {}
        for u, v, table_like in edges:
            key, table = self._normalize_edge(num_nodes, num_actions, u, v, table_like)
            if key in tables:
                raise InvalidNetworkError(reason='Duplicate edge.', edge=list(key))
            tables[key] = table

        potentials.setflags(write=False)
        self.num_actions = num_actions
        self.node_potentials = potentials
        self._edge_tables = dict(sorted(tables.items()))

        neighbor_lists: list[list[int]] = [[] for _ in range(num_nodes)]
        oriented: dict[tuple[int, int], OrientedTable] = {}
        for (u, v), table in self._edge_tables.items():
            neighbor_lists[u].append(v)
            neighbor_lists[v].append(u)
            oriented[u, v] = tuple(tuple(float(value) for value in row) for row in table)
            oriented[v, u] = tuple(tuple(float(value) for value in row) for row in table.T)

        self._neighbors = tuple(tuple(sorted(neighbors)) for neighbors in neighbor_lists)
        self._potential_rows = tuple(tuple(float(value) for value in row) for row in potentials)
        self._oriented_tables = oriented

    @staticmethod
    def _normalize_edge(
        num_nodes: int,
        num_actions: int,
        u: Any,
        v: Any,
        table_like: npt.ArrayLike,
    ) -> tuple[EdgeKey, npt.NDArray[np.float64]]:
        for endpoint in (u, v):
            if not isinstance(endpoint, (int, np.integer)) or not 0 <= endpoint < num_nodes:
                raise InvalidNetworkError(reason='Edge endpoint is not a valid node id.', edge=[u, v])
        u, v = int(u), int(v)
        if u == v:
            raise InvalidNetworkError(reason='Self-loops are not allowed.', edge=[u, v])

        table = np.array(table_like, dtype=np.float64)
        if table.shape != (num_actions, num_actions):
            raise InvalidNetworkError(reason=f'Edge table must have shape ({num_actions}, {num_actions}).', edge=[u, v])
        if np.isnan(table).any() or (table == np.inf).any():
            raise InvalidNetworkError(reason='Edge table entries must be finite or NEG_INF.', edge=[u, v])

        if u > v:
            u, v = v, u
            table = table.T.copy()
        table.setflags(write=False)
        return (u, v), table

    def __repr__(self) -> str:
        return (
            f'DecisionNetwork(num_actions={self.num_actions}, num_nodes={self.num_nodes}, num_edges={self.num_edges})'
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DecisionNetwork):
            return NotImplemented
        return (
            self.num_actions == other.num_actions
            and np.array_equal(self.node_potentials, other.node_potentials)
            and self._edge_tables.keys() == other._edge_tables.keys()
            and all(np.array_equal(table, other._edge_tables[key]) for key, table in self._edge_tables.items())
        )

    @property
    def num_nodes(self) -> int:
        return self.node_potentials.shape[0]

    @property
    def num_edges(self) -> int:
        return len(self._edge_tables)

    @property
    def edge_keys(self) -> tuple[EdgeKey, ...]:
        return tuple(self._edge_tables.keys())

    def edges(self) -> Iterator[tuple[int, int, npt.NDArray[np.float64]]]:
        """
        Iterates over all edges as `(u, v, table)` with `u < v`, sorted by `(u, v)`.
        """
        for (u, v), table in self._edge_tables.items():
            yield u, v, table

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_tables

    def neighbors(self, node: int) -> tuple[int, ...]:
        return self._neighbors[node]

    def degree(self, node: int) -> int:
        return len(self._neighbors[node])

    def max_degree(self) -> int:
        return max((len(neighbors) for neighbors in self._neighbors), default=0)

    def potential(self, node: int) -> tuple[float, ...]:
        return self._potential_rows[node]

    def edge_table(self, u: int, v: int) -> OrientedTable:
        """
        Returns the table of edge {u, v} with row index = action of `u`.
        """
        try:
            return self._oriented_tables[u, v]
        except KeyError:
            raise InvalidNetworkError(reason='Edge does not exist.', edge=[u, v]) from None

    def edge_array(self, u: int, v: int) -> npt.NDArray[np.float64]:
        """
        Returns the table of edge {u, v} as read-only numpy array with row index = action of `u`.
        """
        if u < v:
            key = (u, v)
        else:
            key = (v, u)
        if key not in self._edge_tables:
            raise InvalidNetworkError(reason='Edge does not exist.', edge=[u, v])
        table = self._edge_tables[key]
        return table if u < v else table.T

    def has_hard_constraints(self) -> bool:
        return any(bool((table == NEG_INF).any()) for table in self._edge_tables.values())

    def to_networkx(self) -> nx.Graph:
        """
        Returns the underlying graph (without potentials) as a `networkx.Graph` on the nodes `0, ..., n-1`.
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.num_nodes))
        graph.add_edges_from(self._edge_tables.keys())
        return graph
