"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from cavitylab.exceptions import InvalidViewError
from cavitylab.network import DecisionNetwork, SubnetworkView, as_view

__all__ = [
    'modified_network',
]


def modified_network(
    network: DecisionNetwork | SubnetworkView,
    node: int,
    neighbor_index: int,
    action: int,
    *,
    reference: int = 0,
) -> SubnetworkView:
    """
    Builds the modified network 𝒢(u, j, x) used by the cavity recursion, for `u = node`, `j = neighbor_index` (1-based
    position in the ascending neighbor list of u) and `x = action`:

    - u is removed,
    - the neighbors v_1, ..., v_{j-1} get the delta `Φ_{u,v}(x, ·)` added to their potential,
    - the neighbors v_{j+1}, ..., v_d get the delta `Φ_{u,v}(0, ·)` added to their potential (row `reference` instead
      of row 0 if given),
    - the potential of v_j is unchanged.

    The table of the edge {u, v_j} does not appear anywhere in the result.

    Raises `InvalidViewError` if u is not part of the view or j is not in `[1, deg(u)]`.
    """
    view = as_view(network)
    neighbors = view.neighbors(node)
    if not 1 <= neighbor_index <= len(neighbors):
        raise InvalidViewError(node=node, reason=f'Neighbor index must be in [1, {len(neighbors)}].')

    deltas = {}
    for position, neighbor in enumerate(neighbors, start=1):
        if position == neighbor_index:
            continue
        table = view.base.edge_table(node, neighbor)
        deltas[neighbor] = table[action] if position < neighbor_index else table[reference]
    return view.derive(remove=node, deltas=deltas)
