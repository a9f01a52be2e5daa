"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cavitylab.cavity import CallBudget, ConstantBoundary, PotentialGapBoundary, ce, ce_full, ce_vector
from cavitylab.exceptions import (
    InfeasibleReferenceError,
    InvalidAssignmentError,
    InvalidDepthError,
    InvalidViewError,
    RefusedTooLargeError,
)
from cavitylab.models import (
    ColoringProblem,
    CycleGraph,
    ErdosRenyiBoundedGraph,
    GaussianModel,
    Max2SatProblem,
    ModelSpec,
    MwisExpModel,
    MwisProblem,
    PathGraph,
    RandomTreeGraph,
    UniformModel,
    encode_coloring,
    encode_problem,
    generate,
    generate_network,
)
from cavitylab.network import NEG_INF, DecisionNetwork, WeightedGraph, as_view
from cavitylab.oracle import cavity_exact, solve_tree
from tests.test_utils import cycle_edges, k2_mwis, mwis_network, random_network


def _three_regular_tree(height: int) -> list[tuple[int, int]]:
    """
    Edges of a tree whose root has 3 children and every other inner node has 2 children, down to the given height.
    """
    edges = []
    frontier = [0]
    next_node = 1
    for level in range(height):
        new_frontier = []
        for node in frontier:
            for _ in range(3 if level == 0 else 2):
                edges.append((node, next_node))
                new_frontier.append(next_node)
                next_node += 1
        frontier = new_frontier
    return edges


class CavityExpansionTest:
    """
    Tests for the cavity expansion recursion.
    """

    @staticmethod
    @pytest.mark.parametrize('action', [0, 1])
    def test_depth_zero_returns_boundary(action):
        """ Tests that depth 0 returns the boundary condition. """
        network = random_network(cycle_edges(4), 4)

        assert ce(network, 0, 0, action) == 0.0
        assert ce(network, 0, 0, action, ConstantBoundary(1.5)) == (1.5 if action == 1 else 0.0)

    @staticmethod
    def test_isolated_node():
        """ Tests that an isolated node returns its potential gap. """
        network = DecisionNetwork(num_actions=2, node_potentials=[[0.0, 1.25]])
        assert ce(network, 0, 1, 1) == 1.25
        assert ce(network, 0, 5, 1) == 1.25

    @staticmethod
    def test_k2_mwis():
        """ Tests the hand-unrolled recursion on K2 with weights 2 and 3. """
        network = k2_mwis(2.0, 3.0)

        assert ce(network, 0, 2, 1) == -1.0
        assert ce(network, 1, 2, 1) == 1.0
        assert ce(network, 0, 1, 1) == 2.0
        assert ce(network, 0, 1, 1, PotentialGapBoundary()) == -1.0
        assert ce_vector(network, 0, 2) == (0.0, -1.0)

    @staticmethod
    def test_c4_mwis_full():
        """ Tests the exact cavity of C4 with unit weights. """
        network = mwis_network([1, 1, 1, 1], cycle_edges(4))
        for node in range(4):
            assert ce_full(network, node) == (0.0, 0.0)
            assert cavity_exact(network, node) == (0.0, 0.0)

    @staticmethod
    def test_grid_full_matches_brute_force():
        """ Tests ce_full against enumeration on a 3x3 grid with random tables. """
        grid = nx.convert_node_labels_to_integers(nx.grid_2d_graph(3, 3), ordering='sorted')
        network = random_network(list(grid.edges()), 9, seed=7)

        for node in range(9):
            assert ce_full(network, node) == pytest.approx(cavity_exact(network, node), abs=1e-9)

    @staticmethod
    def test_tree_full_matches_tree_solver():
        """ Tests ce_full against the tree solver on a random tree with three actions. """
        tree = RandomTreeGraph(n=10, seed=3).build()
        network = random_network(list(tree.edges()), 10, num_actions=3, seed=3)
        cavities = solve_tree(network).cavities

        for node in range(10):
            assert ce_full(network, node) == pytest.approx(cavities[node], abs=1e-9)

    @staticmethod
    @settings(max_examples=40, deadline=None)
    @given(
        num_nodes=st.integers(min_value=1, max_value=6),
        edge_bits=st.lists(st.booleans(), min_size=15, max_size=15),
        num_actions=st.sampled_from([2, 3]),
        seed=st.integers(min_value=0, max_value=2 ** 32),
    )
    def test_full_depth_is_exact(num_nodes, edge_bits, num_actions, seed):
        """ Tests that the unbounded expansion reproduces the exact cavity on random small networks. """
        pairs = list(itertools.combinations(range(num_nodes), 2))
        edges = [pair for pair, bit in zip(pairs, edge_bits) if bit]
        network = random_network(edges, num_nodes, num_actions=num_actions, seed=seed)

        for node in range(num_nodes):
            assert ce_full(network, node) == pytest.approx(cavity_exact(network, node), abs=1e-9)

    @staticmethod
    def test_view_input():
        """ Tests that the expansion runs on views and uses effective potentials. """
        view = as_view(k2_mwis(2.0, 3.0)).remove(1).add_delta(0, (0.0, 0.5))
        assert ce(view, 0, 3, 1) == 2.5

    @staticmethod
    @pytest.mark.parametrize('depth', [1, 2, 3, 4])
    def test_call_count_on_tree(depth):
        """ Tests the number of recursive calls on a tree with root degree 3 and branching 2 (T = 2). """
        edges = _three_regular_tree(4)
        network = random_network(edges, len(edges) + 1, seed=1)
        budget = CallBudget()

        ce(network, 0, depth, 1, budget=budget)
        assert budget.calls == 3 * 2 ** depth - 2

    @staticmethod
    def test_budget_exceeded():
        """ Tests that exceeding the call budget raises RefusedTooLargeError. """
        network = random_network(cycle_edges(6), 6)

        with pytest.raises(RefusedTooLargeError) as exception_info:
            ce(network, 0, 4, 1, budget=CallBudget(10))

        assert exception_info.value.to_dict() == {
            'code': 'refused_too_large',
            'reason': 'Cavity expansion exceeded the call budget.',
            'limit': 10,
            'parameter': 'max_calls',
        }

    @staticmethod
    def test_invalid_arguments():
        """ Tests errors for negative depths, invalid actions and removed nodes. """
        network = k2_mwis()

        with pytest.raises(InvalidDepthError) as exception_info:
            ce(network, 0, -1, 1)
        assert exception_info.value.to_dict()['depth'] == -1

        with pytest.raises(InvalidAssignmentError):
            ce(network, 0, 1, 2)

        with pytest.raises(InvalidViewError):
            ce(as_view(network).remove(0), 0, 1, 1)

    @staticmethod
    def test_triangle_coloring_full():
        """ Tests the exact cavities of the 3-colorings of a triangle, where subnetworks forbid color 0. """
        network = encode_coloring(3, cycle_edges(3), 3, np.ones((3, 3)))

        for node in range(3):
            assert ce_full(network, node) == (0.0, 0.0, 0.0)
            assert cavity_exact(network, node) == (0.0, 0.0, 0.0)

    @staticmethod
    def test_forbidden_action_zero_below_the_root():
        """ Tests that the recursion continues through a neighbor that cannot take action 0. """
        network = DecisionNetwork(
            num_actions=2,
            node_potentials=[[0.0, 0.5], [0.0, 1.0], [0.0, -0.5]],
            edges=[
                (0, 1, [[0.0, 0.25], [0.75, 0.0]]),
                (0, 2, [[NEG_INF, 0.0], [0.0, 0.0]]),
                (1, 2, [[0.0, 1.5], [-1.0, 0.0]]),
            ],
        )

        for node in range(3):
            assert ce_full(network, node) == pytest.approx(cavity_exact(network, node), abs=1e-9)
        assert ce(network, 0, 3, 1) == pytest.approx(cavity_exact(network, 0)[1], abs=1e-9)

    @staticmethod
    def test_infeasible_intermediate_subnetwork():
        """ Tests the error when a modified network leaves a node without any feasible action. """
        zeros = [[0.0, 0.0], [0.0, 0.0]]
        network = DecisionNetwork(
            num_actions=2,
            node_potentials=[[0.0, 1.0]] * 4,
            edges=[
                (0, 1, zeros),
                (0, 3, [[NEG_INF, 0.0], [0.0, 0.0]]),
                (1, 2, zeros),
                (1, 3, [[0.0, NEG_INF], [0.0, 0.0]]),
                (2, 3, zeros),
            ],
        )

        with pytest.raises(InfeasibleReferenceError) as exception_info:
            ce_full(network, 0)

        assert exception_info.value.to_dict()['node'] == 2
        assert exception_info.value.to_dict()['neighbor'] == 3


SWEEP_FAMILIES = ['uniform', 'gaussian', 'mwis', 'coloring', 'max2sat']


def _bounded_degree_spec(seed: int) -> ErdosRenyiBoundedGraph:
    return ErdosRenyiBoundedGraph(n=3 + seed % 4, p=0.6, dmax=4, seed=seed)


def _coloring_problem(seed: int) -> ColoringProblem:
    """
    3-colorings of cycles, paths and trees with maximum degree 4. On these graphs every subnetwork of the recursion
    stays colorable.
    """
    num_nodes = 3 + seed % 5
    if seed % 3 == 0:
        graph = CycleGraph(n=num_nodes).build()
    elif seed % 3 == 1:
        graph = PathGraph(n=num_nodes).build()
    else:
        trees = (RandomTreeGraph(n=num_nodes, seed=seed + 1000 * attempt).build() for attempt in range(100))
        graph = next(tree for tree in trees if max(degree for _, degree in tree.degree()) <= 4)
    weights = np.random.default_rng(seed).uniform(0.0, 1.0, size=(num_nodes, 3))
    return ColoringProblem(num_nodes=num_nodes, edges=tuple(graph.edges()), q=3, weights=weights.tolist())


def _max2sat_problem(seed: int) -> Max2SatProblem:
    rng = np.random.default_rng(seed)
    graph = _bounded_degree_spec(seed).build()
    clauses: list[tuple[int, ...]] = []
    for u, v in graph.edges():
        for _ in range(int(rng.integers(1, 3))):
            clauses.append((int(rng.choice([-1, 1]) * (u + 1)), int(rng.choice([-1, 1]) * (v + 1))))
    for node in graph.nodes():
        if rng.random() < 0.5:
            clauses.append((int(rng.choice([-1, 1]) * (node + 1)),))
    return Max2SatProblem(num_variables=graph.number_of_nodes(), clauses=tuple(clauses))


def _sweep_network(family: str, seed: int) -> DecisionNetwork:
    if family == 'uniform':
        return generate_network(ModelSpec(UniformModel(1.0, 0.5), _bounded_degree_spec(seed), seed=seed))
    if family == 'gaussian':
        model = GaussianModel(sigma_e=1.0, sigma_p=1.0)
        return generate_network(ModelSpec(model, _bounded_degree_spec(seed), seed=seed))
    if family == 'mwis':
        graph = generate(ModelSpec(MwisExpModel(), _bounded_degree_spec(seed), seed=seed))
        assert isinstance(graph, WeightedGraph)
        return encode_problem(MwisProblem(graph))
    if family == 'coloring':
        return encode_problem(_coloring_problem(seed))
    return encode_problem(_max2sat_problem(seed))


class CavityExpansionSweepTest:
    """
    Compares the unbounded expansion with enumeration on 320 small instances (n <= 7, T <= 3, maximum degree 4).
    """

    @staticmethod
    @pytest.mark.parametrize('seed', range(64))
    @pytest.mark.parametrize('family', SWEEP_FAMILIES)
    def test_full_expansion_matches_enumeration(family, seed):
        """ Tests ce_full against cavity_exact on every node of a generated or encoded instance. """
        network = _sweep_network(family, seed)

        assert network.max_degree() <= 4
        for node in range(network.num_nodes):
            assert ce_full(network, node) == pytest.approx(cavity_exact(network, node), abs=1e-9)
