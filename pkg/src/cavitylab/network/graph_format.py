"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import json

from validataclass.dataclasses import Default, validataclass
from validataclass.exceptions import ValidationError
from validataclass.validators import DataclassValidator, FloatValidator, IntegerValidator, ListValidator

from cavitylab.exceptions import ParseError
from .instance_format import error_location, item_field_error, parse_json_document
from .weighted_graph import WeightedGraph

__all__ = [
    'WeightedGraphRecord',
    'WeightedNodeRecord',
    'is_weighted_graph_document',
    'load_weighted_graph',
    'save_weighted_graph',
]


@validataclass
class WeightedNodeRecord:
    id: int = IntegerValidator(min_value=0)
    w: float = FloatValidator(allow_integers=True, min_value=0)


@validataclass
class WeightedGraphRecord:
    """
    Compact weighted graph file: `{"nodes": [{"id": int, "w": num}, ...], "edges": [[u, v], ...]}`.
    """
    nodes: list[WeightedNodeRecord] = ListValidator(DataclassValidator(WeightedNodeRecord))
    edges: list[list[int]] = (
        ListValidator(ListValidator(IntegerValidator(min_value=0), min_length=2, max_length=2)),
        Default([]),
    )

    def __post_validate__(self) -> None:
        num_nodes = len(self.nodes)
        seen_ids: set[int] = set()
        for index, node in enumerate(self.nodes):
            if node.id >= num_nodes or node.id in seen_ids:
                raise item_field_error('nodes', index, 'id', ValidationError(
                    code='invalid_node_id',
                    reason=f'Node ids must be 0, ..., {num_nodes - 1}, each exactly once.',
                ))
            seen_ids.add(node.id)

        seen_edges: set[tuple[int, int]] = set()
        for index, (u, v) in enumerate(self.edges):
            if u >= num_nodes or v >= num_nodes or u == v:
                raise item_field_error('edges', index, None, ValidationError(
                    code='invalid_edge',
                    reason='Edge endpoints must be two different node ids.',
                ))
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                raise item_field_error('edges', index, None, ValidationError(code='duplicate_edge'))
            seen_edges.add(key)

    def to_graph(self) -> WeightedGraph:
        weights = [0.0] * len(self.nodes)
        for node in self.nodes:
            weights[node.id] = node.w
        return WeightedGraph(weights=weights, edges=[(u, v) for u, v in self.edges])


def is_weighted_graph_document(document: object) -> bool:
    """
    Returns True if a parsed JSON document looks like a weighted graph file rather than an instance file.
    """
    return isinstance(document, dict) and 'num_actions' not in document


def load_weighted_graph(data: bytes | str) -> WeightedGraph:
    """
    Parses a weighted graph file. Raises `ParseError` with the location of the first offending element.
    """
    document = parse_json_document(data)
    try:
        record = DataclassValidator(WeightedGraphRecord).validate(document)
    except ValidationError as error:
        error_dict = error.to_dict()
        raise ParseError(
            location=error_location(error_dict),
            validation_error=error_dict,
            reason='Invalid weighted graph document.',
        ) from None
    return record.to_graph()


def save_weighted_graph(graph: WeightedGraph) -> bytes:
    """
    Serializes a weighted graph (UTF-8 encoded JSON, nodes sorted by id, edges sorted).
    """
    document = {
        'nodes': [{'id': node, 'w': weight} for node, weight in enumerate(graph.weights)],
        'edges': [[u, v] for u, v in graph.edges],
    }
    return (json.dumps(document, indent=2) + '\n').encode('utf-8')
