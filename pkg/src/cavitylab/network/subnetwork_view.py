"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import dataclasses
from collections.abc import Iterator, Mapping, Sequence

from cavitylab.exceptions import InvalidNetworkError, InvalidViewError
from .decision_network import DecisionNetwork, EdgeKey, OrientedTable

__all__ = [
    'SubnetworkView',
    'as_view',
]


@dataclasses.dataclass(frozen=True)
class SubnetworkView:
    """
    Lazy, immutable view on a `DecisionNetwork`: a set of removed nodes plus additive corrections of node potentials.

    Views are never mutated. Every operation that changes a view (`remove()`, `add_delta()`, `derive()`) returns a new
    view and leaves the original untouched, so views can be shared freely between recursive calls and threads.

    A removed node never appears in neighborhood queries, and edges with a removed endpoint are absent from the view.
    The effective potential of an active node is its base potential plus the accumulated deltas. Deltas may contain
    `NEG_INF` (e.g. a coloring constraint pushed onto a neighbor), in which case the effective potential is `NEG_INF`
    for that action.

    Example:

    ```
    view = as_view(network).remove(0).add_delta(1, (1.0, 0.0))
    view.neighbors(2)  # node 0 is absent
    view.effective_potential(1)
    ```
    """

    base: DecisionNetwork
    removed: frozenset[int] = frozenset()
    potential_delta: Mapping[int, tuple[float, ...]] = dataclasses.field(default_factory=dict)

    @property
    def num_actions(self) -> int:
        return self.base.num_actions

    @property
    def num_nodes(self) -> int:
        """
        Number of active (not removed) nodes.
        """
        return self.base.num_nodes - len(self.removed)

    def contains(self, node: int) -> bool:
        return 0 <= node < self.base.num_nodes and node not in self.removed

    def ensure_contains(self, node: int) -> None:
        """
        Raises `InvalidViewError` if the node is not an active node of this view.
        """
        if not self.contains(node):
            raise InvalidViewError(node=node, reason='Node is not part of the view.')

    def active_nodes(self) -> tuple[int, ...]:
        return tuple(node for node in range(self.base.num_nodes) if node not in self.removed)

    def neighbors(self, node: int) -> tuple[int, ...]:
        """
        Returns the active neighbors of a node in ascending order of node id.
        """
        self.ensure_contains(node)
        removed = self.removed
        if not removed:
            return self.base.neighbors(node)
        return tuple(neighbor for neighbor in self.base.neighbors(node) if neighbor not in removed)

    def degree(self, node: int) -> int:
        return len(self.neighbors(node))

    def max_degree(self) -> int:
        return max((self.degree(node) for node in self.active_nodes()), default=0)

    def edges(self) -> Iterator[EdgeKey]:
        """
        Iterates over the keys `(u, v)` (with `u < v`) of all edges whose endpoints are both active.
        """
        removed = self.removed
        for u, v in self.base.edge_keys:
            if u not in removed and v not in removed:
                yield u, v

    def edge_table(self, u: int, v: int) -> OrientedTable:
        """
        Returns the table of edge {u, v} with row index = action of `u`. Both endpoints must be active.
        """
        self.ensure_contains(u)
        self.ensure_contains(v)
        return self.base.edge_table(u, v)

    def effective_potential(self, node: int) -> tuple[float, ...]:
        """
        Returns base potential plus accumulated deltas of an active node.
        """
        self.ensure_contains(node)
        potential = self.base.potential(node)
        delta = self.potential_delta.get(node)
        if delta is None:
            return potential
        # Float addition is extended addition here, since there is no positive infinity
        return tuple(value + correction for value, correction in zip(potential, delta))

    def remove(self, node: int) -> 'SubnetworkView':
        """
        Returns a new view with the node removed. Raises `InvalidViewError` if the node is absent.
        """
        return self.derive(remove=node)

    def add_delta(self, node: int, delta: Sequence[float]) -> 'SubnetworkView':
        """
        Returns a new view in which the effective potential of the node is shifted by `delta` (a vector of length T).
        Deltas accumulate additively over nested views.
        """
        return self.derive(deltas={node: delta})

    def derive(
        self,
        *,
        remove: int | None = None,
        deltas: Mapping[int, Sequence[float]] | None = None,
    ) -> 'SubnetworkView':
        """
        Returns a new view with (optionally) one node removed and (optionally) several deltas added, copying the state
        of this view only once.
        """
        removed = self.removed
        if remove is not None:
            self.ensure_contains(remove)
            removed = removed | {remove}

        new_deltas = dict(self.potential_delta)
        if remove is not None:
            new_deltas.pop(remove, None)
        for node, delta in (deltas or {}).items():
            if node == remove:
                raise InvalidViewError(node=node, reason='Cannot add a delta to a node that is being removed.')
            self.ensure_contains(node)
            if len(delta) != self.num_actions:
                raise InvalidViewError(node=node, reason=f'Delta vector must have length {self.num_actions}.')
            previous = new_deltas.get(node)
            if previous is None:
                new_deltas[node] = tuple(float(value) for value in delta)
            else:
                new_deltas[node] = tuple(old + float(value) for old, value in zip(previous, delta))

        return SubnetworkView(base=self.base, removed=frozenset(removed), potential_delta=new_deltas)

    def materialize(self) -> tuple[DecisionNetwork, tuple[int, ...]]:
        """
        Builds a standalone `DecisionNetwork` equivalent to this view. The active nodes are relabeled `0, ..., k-1` in
        ascending order; the returned tuple maps new ids to base ids.

        Raises `InvalidNetworkError` if an effective potential is `NEG_INF` (decision networks need finite node
        potentials).
        """
        node_map = self.active_nodes()
        new_ids = {old: new for new, old in enumerate(node_map)}
        potentials = [self.effective_potential(node) for node in node_map]
        edges = [
            (new_ids[u], new_ids[v], self.base.edge_table(u, v))
            for u, v in self.edges()
        ]
        try:
            network = DecisionNetwork(num_actions=self.num_actions, node_potentials=potentials, edges=edges)
        except InvalidNetworkError as error:
            raise InvalidNetworkError(reason='View cannot be materialized: ' + str(error.reason)) from error
        return network, node_map


def as_view(network: DecisionNetwork | SubnetworkView) -> SubnetworkView:
    """
    Returns the argument if it is a view already, or a view on the whole network otherwise.
    """
    if isinstance(network, SubnetworkView):
        return network
    return SubnetworkView(base=network)
