"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from cavitylab.exceptions import EncodeError, InvalidNetworkError
from cavitylab.network import NEG_INF, DecisionNetwork, WeightedGraph

__all__ = [
    'ColoringProblem',
    'Max2SatProblem',
    'MwisProblem',
    'decode_mwis',
    'encode_coloring',
    'encode_max2sat',
    'encode_mwis',
    'encode_problem',
]

# Edge table of the MWIS encoding: both endpoints chosen is forbidden
MWIS_EDGE_TABLE = ((0.0, 0.0), (0.0, NEG_INF))


@dataclass(frozen=True)
class MwisProblem:
    graph: WeightedGraph


@dataclass(frozen=True)
class ColoringProblem:
    """
    Maximum weight proper coloring: every node gets one of `q` colors, adjacent nodes must differ, and the objective
    is the sum of the node-color weights `weights[v][x]`.
    """
    num_nodes: int
    edges: tuple[tuple[int, int], ...]
    q: int
    weights: Sequence[Sequence[float]]


@dataclass(frozen=True)
class Max2SatProblem:
    """
    Max-2-SAT over variables `z_1, ..., z_n`. Clauses are tuples of one or two literals in DIMACS convention: literal
    `k` is `z_k`, literal `-k` is `¬z_k`.
    """
    num_variables: int
    clauses: tuple[tuple[int, ...], ...] = field(default_factory=tuple)


def encode_mwis(graph: WeightedGraph) -> DecisionNetwork:
    """
    Encodes maximum weight independent set: T = 2 (action 1 = node chosen), `Φ_v = (0, W_v)` and `Φ_e(1,1) = NEG_INF`.
    """
    return DecisionNetwork(
        num_actions=2,
        node_potentials=[[0.0, weight] for weight in graph.weights],
        edges=[(u, v, MWIS_EDGE_TABLE) for u, v in graph.edges],
    )


def decode_mwis(network: DecisionNetwork) -> WeightedGraph:
    """
    Inverse of `encode_mwis()`. Raises `EncodeError` if the network is not an MWIS encoding.
    """
    if network.num_actions != 2:
        raise EncodeError(reason='MWIS networks have exactly two actions.')
    potentials = network.node_potentials
    if potentials.shape[0] > 0 and ((potentials[:, 0] != 0).any() or (potentials[:, 1] < 0).any()):
        raise EncodeError(reason='MWIS node potentials must be (0, W) with W >= 0.')
    expected_table = np.array(MWIS_EDGE_TABLE)
    for u, v, table in network.edges():
        if not np.array_equal(table, expected_table):
            raise EncodeError(reason='Edge table is not the independence constraint.', edge=[u, v])
    return WeightedGraph(weights=potentials[:, 1], edges=network.edge_keys)


def encode_coloring(
    num_nodes: int,
    edges: Sequence[tuple[int, int]],
    q: int,
    weights: npt.ArrayLike,
) -> DecisionNetwork:
    """
    Encodes maximum weight proper coloring with q colors: `Φ_v(x) = weights[v][x]`, `Φ_e(x, x) = NEG_INF` and 0
    elsewhere.
    """
    if type(q) is not int or q < 2:
        raise EncodeError(reason='Coloring needs at least two colors.', parameter='q')
    weight_array = np.asarray(weights, dtype=np.float64)
    if weight_array.shape != (num_nodes, q) or not np.isfinite(weight_array).all():
        raise EncodeError(reason=f'Color weights must be a finite array of shape ({num_nodes}, {q}).')

    table = np.zeros((q, q))
    np.fill_diagonal(table, NEG_INF)
    try:
        return DecisionNetwork(num_actions=q, node_potentials=weight_array, edges=[(u, v, table) for u, v in edges])
    except InvalidNetworkError as error:
        raise EncodeError(reason=f'Invalid coloring graph: {error.reason}') from error


def _literal_node(literal: int, num_variables: int) -> tuple[int, int]:
    """
    Returns `(node, satisfying action)` of a literal.
    """
    if type(literal) is not int or literal == 0 or abs(literal) > num_variables:
        raise EncodeError(reason='Literal does not reference a valid variable.', literal=literal)
    return abs(literal) - 1, 1 if literal > 0 else 0


def encode_max2sat(num_variables: int, clauses: Sequence[Sequence[int]]) -> DecisionNetwork:
    """
    Encodes Max-2-SAT: node `k - 1` is variable `z_k` (action 1 = true) and every clause contributes 1 if satisfied.
    Clauses on two distinct variables go to the edge table of that pair (clauses on the same pair accumulate), unit
    clauses and clauses with a repeated variable go to the node potential.
    """
    if type(num_variables) is not int or num_variables < 0:
        raise EncodeError(reason='Number of variables must be a non-negative integer.')

    potentials = np.zeros((num_variables, 2))
    tables: dict[tuple[int, int], npt.NDArray[np.float64]] = {}
    for clause in clauses:
        if not 1 <= len(clause) <= 2:
            raise EncodeError(reason='Clauses must have one or two literals.', clause=list(clause))
        literals = [_literal_node(literal, num_variables) for literal in clause]

        if len(literals) == 1 or literals[0][0] == literals[1][0]:
            node = literals[0][0]
            satisfying_actions = {action for _, action in literals}
            for action in satisfying_actions:
                potentials[node, action] += 1
            continue

        (u, action_u), (v, action_v) = sorted(literals)
        table = tables.setdefault((u, v), np.zeros((2, 2)))
        for x in range(2):
            for y in range(2):
                if x == action_u or y == action_v:
                    table[x, y] += 1

    return DecisionNetwork(
        num_actions=2,
        node_potentials=potentials,
        edges=[(u, v, table) for (u, v), table in tables.items()],
    )


def encode_problem(problem: MwisProblem | ColoringProblem | Max2SatProblem) -> DecisionNetwork:
    """
    Encodes a combinatorial problem as a decision network whose optimum equals the combinatorial optimum.
    """
    if isinstance(problem, MwisProblem):
        return encode_mwis(problem.graph)
    if isinstance(problem, ColoringProblem):
        return encode_coloring(problem.num_nodes, problem.edges, problem.q, problem.weights)
    if isinstance(problem, Max2SatProblem):
        return encode_max2sat(problem.num_variables, problem.clauses)
    raise EncodeError(reason=f'Unsupported problem type {type(problem).__name__}.')
