"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import pytest

from cavitylab.exceptions import InvalidParamsError, InvalidViewError
from cavitylab.experiments import measure_mixture_moment_identity, measure_moment_identity, neighbor_cavity_sum
from cavitylab.network import WeightedGraph
from cavitylab.oracle import BranchAndBoundLimits
from tests.test_utils import path_edges, star_edges

K2 = WeightedGraph(weights=[1.0, 1.0], edges=[(0, 1)])


class MomentIdentityTest:
    """
    Tests for the Monte-Carlo checks of the cavity moment identities.
    """

    @staticmethod
    def test_neighbor_cavity_sum():
        """ Tests the neighbor cavity sum on a unit-weight path. """
        graph = WeightedGraph(weights=[1.0, 1.0, 1.0], edges=path_edges(3))
        assert neighbor_cavity_sum(graph, 1, limits=BranchAndBoundLimits()) == 2.0
        assert neighbor_cavity_sum(graph, 0, limits=BranchAndBoundLimits()) == 0.0

    @staticmethod
    @pytest.mark.parametrize('graph, node', [(K2, 0), (WeightedGraph(weights=[1.0] * 4, edges=star_edges(4)), 0)])
    def test_exponential_identity(graph, node):
        """ Tests that both sides of the exponential moment identity agree within 4 standard errors. """
        report = measure_moment_identity(graph, node, 2000, seed=1, threads=1)
        row = report.rows[0]
        assert row.experiment == 'moment-check'
        assert row.trials == 2000
        assert abs(row.extra['z_score']) < 4
        assert 0 < row.extra['lhs'] < 1

    @staticmethod
    @pytest.mark.parametrize('component', [1, 2])
    def test_mixture_identity(component):
        report = measure_mixture_moment_identity(K2, 1, 4.0, 2, component, 2000, seed=2, threads=1)
        row = report.rows[0]
        assert row.experiment == 'mixture-moment-check'
        assert abs(row.extra['z_score']) < 4
        assert report.config['component'] == component

    @staticmethod
    def test_invalid_arguments():
        with pytest.raises(InvalidViewError):
            measure_moment_identity(K2, 2, 10)
        with pytest.raises(InvalidParamsError) as exception_info:
            measure_mixture_moment_identity(K2, 0, 4.0, 2, 3, 10)
        assert exception_info.value.to_dict()['parameter'] == 'component'
