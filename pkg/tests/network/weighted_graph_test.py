"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import json

import pytest

from cavitylab.exceptions import InvalidNetworkError, ParseError
from cavitylab.network import (
    WeightedGraph,
    is_weighted_graph_document,
    load_weighted_graph,
    mask_of,
    nodes_of,
    save_weighted_graph,
)


class WeightedGraphTest:
    """
    Tests for WeightedGraph and the weighted graph file format.
    """

    @staticmethod
    def test_accessors():
        """ Tests neighbors, masks and independence checks on a path. """
        graph = WeightedGraph(weights=[1, 2, 3], edges=[(1, 0), (1, 2)])

        assert graph.weights == (1.0, 2.0, 3.0)
        assert graph.edges == ((0, 1), (1, 2))
        assert graph.neighbors(1) == (0, 2)
        assert graph.neighbor_mask(1) == 0b101
        assert graph.full_mask == 0b111
        assert graph.max_degree() == 2
        assert graph.total_weight([0, 2]) == 4.0
        assert graph.is_independent([0, 2])
        assert graph.find_conflict([0, 1, 2]) == (0, 1)
        assert graph.with_weights([0, 0, 1]).weights == (0.0, 0.0, 1.0)

    @staticmethod
    def test_masks():
        """ Tests conversion between node sets and bit masks. """
        assert mask_of([0, 2, 5]) == 0b100101
        assert nodes_of(0b100101) == (0, 2, 5)
        assert nodes_of(0) == ()

    @staticmethod
    @pytest.mark.parametrize(
        'weights, edges',
        [
            ([1.0, -1.0], []),
            ([1.0, float('inf')], []),
            ([1.0, 1.0], [(0, 0)]),
            ([1.0, 1.0], [(0, 2)]),
            ([1.0, 1.0], [(0, 1), (1, 0)]),
        ],
    )
    def test_invalid_graphs(weights, edges):
        """ Tests that invalid weights and edges raise InvalidNetworkError. """
        with pytest.raises(InvalidNetworkError):
            WeightedGraph(weights=weights, edges=edges)

    @staticmethod
    def test_file_format():
        """ Tests saving and loading the compact weighted graph file format. """
        graph = WeightedGraph(weights=[1.5, 2.0], edges=[(0, 1)])
        data = save_weighted_graph(graph)

        assert json.loads(data) == {'nodes': [{'id': 0, 'w': 1.5}, {'id': 1, 'w': 2.0}], 'edges': [[0, 1]]}
        assert load_weighted_graph(data) == graph
        assert is_weighted_graph_document(json.loads(data))
        assert not is_weighted_graph_document({'num_actions': 2, 'nodes': []})

    @staticmethod
    @pytest.mark.parametrize(
        'document, expected_location',
        [
            ({'nodes': [{'id': 0, 'w': -1}]}, 'nodes[0].w'),
            ({'nodes': [{'id': 1, 'w': 1}]}, 'nodes[0].id'),
            ({'nodes': [{'id': 0, 'w': 1}, {'id': 1, 'w': 1}], 'edges': [[0, 0]]}, 'edges[0]'),
            ({'nodes': [{'id': 0, 'w': 1}, {'id': 1, 'w': 1}], 'edges': [[0, 1], [1, 0]]}, 'edges[1]'),
            ({'nodes': [{'id': 0, 'w': 1}, {'id': 1, 'w': 1}], 'edges': [[0, 1, 1]]}, 'edges[0]'),
        ],
    )
    def test_parse_errors(document, expected_location):
        """ Tests that invalid weighted graph documents raise ParseError with a location. """
        with pytest.raises(ParseError) as exception_info:
            load_weighted_graph(json.dumps(document))

        assert exception_info.value.to_dict()['location'] == expected_location
