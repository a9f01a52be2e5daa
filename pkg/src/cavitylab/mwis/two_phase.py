"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import logging
from dataclasses import dataclass
from typing import Any

from cavitylab.exceptions import IndependenceViolationError, InvalidDepthError, InvalidParamsError
from cavitylab.helpers import StreamKey, keyed_uniform, ordered_map
from cavitylab.network import WeightedGraph, mask_of, nodes_of
from .cavity_bounds import BoundSign, c_bound, parse_bound_sign

__all__ = [
    'MwisRun',
    'deletion_probability',
    'delete_nodes',
    'run_two_phase',
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MwisRun:
    """
    Result of one run of the two-phase algorithm: the nodes kept after the random deletion phase and the chosen
    independent set `{i : C(i, r) > 0}` of the kept subgraph.
    """
    epsilon: float
    depth: int
    seed: int
    bound: BoundSign
    kept_nodes: tuple[int, ...]
    chosen_set: tuple[int, ...]
    weight: float

    def to_dict(self) -> dict[str, Any]:
        return {
            'epsilon': self.epsilon,
            'depth': self.depth,
            'seed': self.seed,
            'bound': self.bound.value,
            'kept_nodes': list(self.kept_nodes),
            'chosen_set': list(self.chosen_set),
            'weight': self.weight,
        }


def deletion_probability(epsilon: float) -> float:
    return epsilon ** 2 / 16


def delete_nodes(graph: WeightedGraph, epsilon: float, seed: int) -> int:
    """
    Deletion phase: removes every node independently with probability `ε²/16`. The coin of node i is drawn from the
    stream `(seed, DELETION, i)`. Returns the bitmask of deleted nodes.
    """
    probability = deletion_probability(epsilon)
    return mask_of(
        node for node in range(graph.num_nodes)
        if keyed_uniform(seed, StreamKey.DELETION, node) < probability
    )


def run_two_phase(
    graph: WeightedGraph,
    epsilon: float,
    depth: int,
    seed: int,
    *,
    bound: BoundSign | str = BoundSign.MINUS,
    threads: int | None = None,
) -> MwisRun:
    """
    Two-phase approximation of maximum weight independent set: random node deletion with probability `ε²/16`, then
    every kept node whose truncated cavity bound of depth r on the kept subgraph is strictly positive is chosen.

    With the default `MINUS` bound the depth must be even, with the `PLUS` bound it must be odd (both are lower bounds
    of the exact cavity then). The chosen set is checked for independence in the original graph on every run.

    Raises `InvalidParamsError` if epsilon is not in (0, 1) and `InvalidDepthError` on a depth of the wrong parity.
    """
    bound_sign = parse_bound_sign(bound)
    if not 0 < epsilon < 1:
        raise InvalidParamsError(parameter='epsilon', reason='Epsilon must be in (0, 1).')
    if type(depth) is not int or depth < 0:
        raise InvalidDepthError(depth=depth, reason='Depth must be a non-negative integer.')
    expected_parity = 0 if bound_sign is BoundSign.MINUS else 1
    if depth % 2 != expected_parity:
        raise InvalidDepthError(
            depth=depth,
            reason=f"The '{bound_sign.value}' bound needs an {'even' if expected_parity == 0 else 'odd'} depth.",
        )

    deleted = delete_nodes(graph, epsilon, seed)
    kept_nodes = tuple(node for node in range(graph.num_nodes) if not deleted >> node & 1)
    logger.debug('Deletion phase removed %d of %d nodes.', len(nodes_of(deleted)), graph.num_nodes)

    bounds = ordered_map(
        lambda node: c_bound(graph, node, depth, bound_sign, removed=deleted),
        kept_nodes,
        threads=threads,
    )
    chosen_set = tuple(node for node, value in zip(kept_nodes, bounds) if value > 0)

    conflict = graph.find_conflict(chosen_set)
    if conflict is not None:
        logger.error('Two-phase run produced a dependent set, conflicting edge %s.', conflict)
        raise IndependenceViolationError(edge=list(conflict), reason='Chosen set is not independent.')

    return MwisRun(
        epsilon=epsilon,
        depth=depth,
        seed=seed,
        bound=bound_sign,
        kept_nodes=kept_nodes,
        chosen_set=chosen_set,
        weight=graph.total_weight(chosen_set),
    )
