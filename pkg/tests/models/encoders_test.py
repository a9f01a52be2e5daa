"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import numpy as np
import pytest

from cavitylab.exceptions import EncodeError, InfeasibleError
from cavitylab.models import (
    ColoringProblem,
    Max2SatProblem,
    MwisProblem,
    decode_mwis,
    encode_coloring,
    encode_max2sat,
    encode_mwis,
    encode_problem,
)
from cavitylab.network import NEG_INF, DecisionNetwork, WeightedGraph
from cavitylab.oracle import solve_brute
from tests.test_utils import cycle_edges

TRIANGLE = [(0, 1), (1, 2), (0, 2)]


class EncodersTest:
    """
    Tests for the encodings of combinatorial problems as decision networks.
    """

    @staticmethod
    def test_encode_mwis():
        """ Tests that the encoded optimum of K2 is the heavier node. """
        network = encode_mwis(WeightedGraph(weights=[2, 3], edges=[(0, 1)]))
        assert network.edge_table(0, 1) == ((0.0, 0.0), (0.0, NEG_INF))
        solution = solve_brute(network)
        assert solution.optimum == 3.0
        assert solution.argmax == (0, 1)

    @staticmethod
    def test_decode_mwis():
        graph = WeightedGraph(weights=[1.5, 0.5, 2.0, 1.0, 0.0], edges=cycle_edges(5))
        assert decode_mwis(encode_mwis(graph)) == graph

    @staticmethod
    @pytest.mark.parametrize(
        'network',
        [
            DecisionNetwork(num_actions=3, node_potentials=[[0, 1, 2]]),
            DecisionNetwork(num_actions=2, node_potentials=[[1, 2]]),
            DecisionNetwork(num_actions=2, node_potentials=[[0, -1]]),
            DecisionNetwork(num_actions=2, node_potentials=[[0, 1], [0, 1]], edges=[(0, 1, [[0, 0], [0, -5]])]),
        ],
    )
    def test_decode_mwis_invalid(network):
        """ Tests that networks which are not MWIS encodings are refused. """
        with pytest.raises(EncodeError):
            decode_mwis(network)

    @staticmethod
    def test_coloring_triangle():
        """ Tests that a triangle with three colors is colored properly. """
        network = encode_coloring(3, TRIANGLE, 3, np.ones((3, 3)))
        solution = solve_brute(network)
        assert solution.optimum == 3.0
        assert sorted(solution.argmax) == [0, 1, 2]

    @staticmethod
    def test_coloring_preferences():
        """ Tests that only one node of a triangle gets the preferred color. """
        network = encode_coloring(3, TRIANGLE, 3, [[1, 0, 0]] * 3)
        assert solve_brute(network).optimum == 1.0

    @staticmethod
    def test_coloring_infeasible():
        """ Tests that a triangle cannot be 2-colored. """
        with pytest.raises(InfeasibleError):
            solve_brute(encode_coloring(3, TRIANGLE, 2, np.zeros((3, 2))))

    @staticmethod
    def test_coloring_invalid():
        with pytest.raises(EncodeError) as exception_info:
            encode_coloring(3, TRIANGLE, 1, np.zeros((3, 1)))
        assert exception_info.value.to_dict()['parameter'] == 'q'

        with pytest.raises(EncodeError) as exception_info:
            encode_coloring(3, TRIANGLE, 3, np.zeros((3, 2)))
        assert exception_info.value.to_dict() == {
            'code': 'encode_error',
            'reason': 'Color weights must be a finite array of shape (3, 3).',
        }

        with pytest.raises(EncodeError) as exception_info:
            encode_coloring(2, [(1, 1)], 2, np.zeros((2, 2)))
        assert exception_info.value.to_dict() == {
            'code': 'encode_error',
            'reason': 'Invalid coloring graph: Self-loops are not allowed.',
        }

    @staticmethod
    @pytest.mark.parametrize(
        'num_variables, clauses, optimum',
        [
            (2, [(1, 2), (-1, -2)], 2.0),
            (2, [(1, 2), (-1, -2), (1, -2), (-1, 2)], 3.0),
            (1, [(1,), (-1,)], 1.0),
            (1, [(1, -1)], 1.0),
            (2, [(1, 2), (2, 1), (1,)], 3.0),
            (3, [], 0.0),
        ],
    )
    def test_max2sat(num_variables, clauses, optimum):
        """ Tests that the encoded optimum is the number of satisfiable clauses. """
        assert solve_brute(encode_max2sat(num_variables, clauses)).optimum == optimum

    @staticmethod
    def test_max2sat_pair_tables_accumulate():
        """ Tests that clauses on the same variable pair share one edge table. """
        network = encode_max2sat(2, [(1, 2), (-2, 1)])
        assert network.num_edges == 1
        assert network.edge_table(0, 1) == ((1.0, 1.0), (2.0, 2.0))

    @staticmethod
    @pytest.mark.parametrize('clauses', [[(0, 1)], [(3,)], [(1, 2, -1)], [()]])
    def test_max2sat_invalid(clauses):
        with pytest.raises(EncodeError):
            encode_max2sat(2, clauses)

    @staticmethod
    def test_encode_problem():
        """ Tests the problem dispatch. """
        graph = WeightedGraph(weights=[2, 3], edges=[(0, 1)])
        assert encode_problem(MwisProblem(graph)) == encode_mwis(graph)
        assert encode_problem(Max2SatProblem(2, ((1, 2),))) == encode_max2sat(2, [(1, 2)])
        assert encode_problem(ColoringProblem(3, tuple(TRIANGLE), 3, np.ones((3, 3)))) == encode_coloring(
            3, TRIANGLE, 3, np.ones((3, 3)),
        )

        with pytest.raises(EncodeError):
            encode_problem(graph)
