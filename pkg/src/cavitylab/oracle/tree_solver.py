"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from dataclasses import dataclass
from typing import Any

import networkx as nx

from cavitylab.exceptions import InfeasibleError, NotATreeError
from cavitylab.network import (
    NEG_INF,
    CavityVector,
    DecisionNetwork,
    ExtReal,
    SubnetworkView,
    as_view,
    evaluate,
    ext_add,
    ext_max,
    ext_sub,
    format_ext_real,
)
from .exact_solution import ExactSolution

__all__ = [
    'TreeSolution',
    'solve_tree',
]


@dataclass(frozen=True)
class TreeSolution:
    """
    Result of the tree solver: the exact cavity vector of every active node and an optimal assignment.

    Nodes whose cavity is undefined (no feasible assignment with action 0 at the node) are missing from `cavities` and
    listed in `undefined` instead. The optimum and the assignment are computed regardless.
    """
    cavities: dict[int, CavityVector]
    solution: ExactSolution
    undefined: tuple[int, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            'cavities': {
                str(node): [format_ext_real(value) for value in cavity] for node, cavity in self.cavities.items()
            },
            'undefined': list(self.undefined),
            **self.solution.to_dict(),
        }


def _normalized(values: list[ExtReal]) -> CavityVector:
    best = max(values)
    if best == NEG_INF:
        raise InfeasibleError(reason='Every assignment violates a hard constraint.')
    return tuple(ext_sub(value, best) for value in values)


class _TreeMessages:
    """
    Two-pass max-product message passing on a forest. `messages[w, v]` holds the conditional optima `J_{w∖v}(y)` of
    node w in the subtree that remains when the edge {v, w} is cut, shifted so that the largest entry is 0.
    """

    def __init__(self, view: SubnetworkView):
        self.view = view
        self.messages: dict[tuple[int, int], CavityVector] = {}

    def scores(self, node: int, exclude: int | None = None) -> list[ExtReal]:
        """
        Returns the conditional optima of the node in its subtree (without the side of `exclude`) up to a constant.
        """
        total = list(self.view.effective_potential(node))
        for neighbor in self.view.neighbors(node):
            if neighbor == exclude:
                continue
            table = self.view.edge_table(node, neighbor)
            message = self.messages[neighbor, node]
            total = [
                ext_add(value, ext_max(*(ext_add(entry, incoming) for entry, incoming in zip(row, message))))
                for value, row in zip(total, table)
            ]
        return total

    def message(self, node: int, exclude: int) -> CavityVector:
        return _normalized(self.scores(node, exclude=exclude))


def _bfs_order(graph: nx.Graph, root: int) -> tuple[list[int], dict[int, int | None]]:
    parent: dict[int, int | None] = {root: None}
    order = [root]
    for u, v in nx.bfs_edges(graph, root, sort_neighbors=sorted):
        parent[v] = u
        order.append(v)
    return order, parent


def _argmax(values: list[float]) -> tuple[int, bool]:
    """
    Returns the smallest index of the maximum and whether the maximum is attained more than once.
    """
    best = max(values)
    return values.index(best), values.count(best) > 1


def solve_tree(network: DecisionNetwork | SubnetworkView) -> TreeSolution:
    """
    Solves a network whose graph is a forest exactly in time linear in the number of nodes (for fixed T), by computing
    the conditional optima of all nodes with one upward and one downward pass of max-product messages per component.
    Messages are only defined up to a constant, so hard constraints (also an all-`NEG_INF` row 0 of an edge table) do
    not get in the way.

    The optimal assignment is decoded top-down from the smallest node of each component, ties broken toward the
    smallest action. `unique` is False if any tie was encountered while decoding.

    Raises `NotATreeError` if the graph contains a cycle and `InfeasibleError` if every assignment is infeasible.
    """
    view = as_view(network)
    graph = nx.Graph()
    graph.add_nodes_from(view.active_nodes())
    graph.add_edges_from(view.edges())
    if graph.number_of_nodes() > 0 and not nx.is_forest(graph):
        raise NotATreeError(reason='The network contains a cycle.')

    state = _TreeMessages(view)
    components: list[tuple[list[int], dict[int, int | None]]] = []
    for component in sorted(nx.connected_components(graph), key=min):
        order, parent = _bfs_order(graph, min(component))
        components.append((order, parent))
        for node in reversed(order[1:]):
            state.messages[node, parent[node]] = state.message(node, exclude=parent[node])  # type: ignore[arg-type]
        for node in order:
            for neighbor in view.neighbors(node):
                if parent.get(neighbor) == node:
                    state.messages[node, neighbor] = state.message(node, exclude=neighbor)

    cavities: dict[int, CavityVector] = {}
    undefined: list[int] = []
    for node in view.active_nodes():
        normalized = _normalized(state.scores(node))
        if normalized[0] == NEG_INF:
            undefined.append(node)
        else:
            cavities[node] = tuple(ext_sub(value, normalized[0]) for value in normalized)

    actions = [0] * view.base.num_nodes
    unique = True
    for order, parent in components:
        root_action, tie = _argmax(state.scores(order[0]))
        actions[order[0]] = root_action
        unique = unique and not tie
        for node in order[1:]:
            parent_node: int = parent[node]  # type: ignore[assignment]
            table = view.edge_table(parent_node, node)
            scores = [
                ext_add(table[actions[parent_node]][action], state.messages[node, parent_node][action])
                for action in range(view.num_actions)
            ]
            actions[node], tie = _argmax(scores)
            unique = unique and not tie

    argmax = tuple(actions)
    return TreeSolution(
        cavities=cavities,
        solution=ExactSolution(optimum=evaluate(view, argmax), argmax=argmax, unique=unique),
        undefined=tuple(undefined),
    )
