"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import pytest

from cavitylab.exceptions import InvalidAssignmentError, InvalidNetworkError, InvalidViewError
from cavitylab.network import NEG_INF, as_view, evaluate, validate_assignment
from tests.test_utils import k2_mwis, random_network, star_edges


class SubnetworkViewTest:
    """
    Tests for SubnetworkView and the evaluation of assignments.
    """

    @staticmethod
    def test_remove_hides_node():
        """ Tests that removed nodes disappear from neighborhoods and edges without changing the original view. """
        network = random_network(star_edges(4), 4)
        view = as_view(network)
        removed = view.remove(0)

        assert view.neighbors(1) == (0,)
        assert removed.neighbors(1) == ()
        assert list(removed.edges()) == []
        assert removed.active_nodes() == (1, 2, 3)
        assert removed.num_nodes == 3
        assert view.num_nodes == 4
        assert not removed.contains(0)

    @staticmethod
    def test_deltas_accumulate():
        """ Tests that potential deltas add up over nested views. """
        network = k2_mwis(2.0, 3.0)
        view = as_view(network).add_delta(0, (1.0, 0.5)).add_delta(0, (0.0, NEG_INF))

        assert view.effective_potential(0) == (1.0, NEG_INF)
        assert view.effective_potential(1) == (0.0, 3.0)
        assert as_view(network).effective_potential(0) == (0.0, 2.0)

    @staticmethod
    def test_removed_node_is_rejected():
        """ Tests that operations on removed nodes raise InvalidViewError. """
        view = as_view(k2_mwis()).remove(1)

        with pytest.raises(InvalidViewError) as exception_info:
            view.remove(1)
        assert exception_info.value.to_dict()['node'] == 1

        with pytest.raises(InvalidViewError):
            view.add_delta(1, (0.0, 1.0))

    @staticmethod
    def test_delta_length_checked():
        """ Tests that delta vectors must have length T. """
        with pytest.raises(InvalidViewError):
            as_view(k2_mwis()).add_delta(0, (1.0,))

    @staticmethod
    def test_materialize():
        """ Tests that a materialized view evaluates like the view itself. """
        network = random_network(star_edges(4), 4, seed=3)
        view = as_view(network).remove(0).add_delta(2, (0.25, -0.5))
        materialized, node_map = view.materialize()

        assert node_map == (1, 2, 3)
        assert materialized.num_edges == 0
        assert evaluate(materialized, (1, 0, 1)) == pytest.approx(evaluate(view, (0, 1, 0, 1)))

    @staticmethod
    def test_materialize_neg_inf_potential():
        """ Tests that views with NEG_INF effective potentials cannot be materialized. """
        view = as_view(k2_mwis()).add_delta(0, (0.0, NEG_INF))
        with pytest.raises(InvalidNetworkError):
            view.materialize()

    @staticmethod
    @pytest.mark.parametrize(
        'assignment, expected',
        [
            ((0, 0), 0.0),
            ((1, 0), 2.0),
            ((0, 1), 3.0),
            ((1, 1), NEG_INF),
        ],
    )
    def test_evaluate_k2(assignment, expected):
        """ Tests the objective of all assignments of K2 with weights 2 and 3. """
        assert evaluate(k2_mwis(2.0, 3.0), assignment) == expected

    @staticmethod
    def test_evaluate_view_ignores_removed():
        """ Tests that entries of removed nodes are ignored by evaluate(). """
        view = as_view(k2_mwis(2.0, 3.0)).remove(1)
        assert evaluate(view, (1, 1)) == 2.0

    @staticmethod
    @pytest.mark.parametrize(
        'assignment, expected_dict',
        [
            ((0,), {'code': 'invalid_assignment', 'expected_length': 2, 'actual_length': 1}),
            ((0, 2), {'code': 'invalid_assignment', 'reason': 'Action must be an integer in [0, 2).', 'node': 1}),
            ((0.0, 1), {'code': 'invalid_assignment', 'reason': 'Action must be an integer in [0, 2).', 'node': 0}),
        ],
    )
    def test_invalid_assignments(assignment, expected_dict):
        """ Tests that malformed assignments raise InvalidAssignmentError. """
        with pytest.raises(InvalidAssignmentError) as exception_info:
            validate_assignment(k2_mwis(), assignment)

        assert exception_info.value.to_dict() == expected_dict
