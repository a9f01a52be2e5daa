"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import json
import logging
from typing import Any

from validataclass.dataclasses import Default, validataclass
from validataclass.exceptions import (
    DataclassPostValidationError,
    DictFieldsValidationError,
    ListItemsValidationError,
    ValidationError,
)
from validataclass.validators import DataclassValidator, FloatValidator, IntegerValidator, ListValidator

from cavitylab.exceptions import ParseError
from cavitylab.validators import ExtRealValidator
from .decision_network import DecisionNetwork
from .extended_real import format_ext_real

__all__ = [
    'EdgeRecord',
    'InstanceRecord',
    'NodeRecord',
    'error_location',
    'item_field_error',
    'load_instance',
    'parse_json_document',
    'save_instance',
]

logger = logging.getLogger(__name__)


def item_field_error(list_name: str, index: int, field_name: str | None, error: ValidationError) -> ValidationError:
    """
    Wraps a validation error so that it points at `list_name[index].field_name` (or `list_name[index]` if `field_name`
    is None) when raised from a `__post_validate__()` method.
    """
    if field_name is not None:
        error = DictFieldsValidationError(field_errors={field_name: error})
    return DataclassPostValidationError(field_errors={
        list_name: ListItemsValidationError(item_errors={index: error}),
    })


def error_location(error_dict: dict[str, Any]) -> str:
    """
    Follows the first nested error in a validation error dictionary and returns its location as a path string, e.g.
    `edges[2].table[1][0]`.
    """
    location = ''
    current = error_dict
    while True:
        if current.get('field_errors'):
            key, current = next(iter(current['field_errors'].items()))
            location = f'{location}.{key}' if location else str(key)
        elif current.get('item_errors'):
            index, current = next(iter(current['item_errors'].items()))
            location = f'{location}[{index}]'
        elif isinstance(current.get('error'), dict):
            current = current['error']
        else:
            return location


@validataclass
class NodeRecord:
    """
    Node of an instance file: `{"id": int, "potential": [num, ...]}`. Node potentials must be finite.
    """
    id: int = IntegerValidator(min_value=0)
    potential: list[float] = ListValidator(FloatValidator(allow_integers=True), min_length=2)


@validataclass
class EdgeRecord:
    """
    Edge of an instance file: `{"u": int, "v": int, "table": [[num | "-inf", ...], ...]}` with `u < v` and row index =
    action of `u`.
    """
    u: int = IntegerValidator(min_value=0)
    v: int = IntegerValidator(min_value=0)
    table: list[list[float]] = ListValidator(ListValidator(ExtRealValidator(), min_length=2), min_length=2)

    def __post_validate__(self) -> None:
        if self.u >= self.v:
            raise DataclassPostValidationError(field_errors={
                'v': ValidationError(code='edge_not_ordered', reason='Edge endpoints must satisfy u < v.'),
            })


@validataclass
class InstanceRecord:
    """
    Instance file: `{"num_actions": T, "nodes": [...], "edges": [...]}`.

    Post-validation checks everything that needs the whole document: node ids must be `0, ..., n-1` (each exactly once,
    in any order), potential vectors must have length T, edge tables must be T×T, edge endpoints must be node ids and
    edges must be unique.
    """
    num_actions: int = IntegerValidator(min_value=2)
    nodes: list[NodeRecord] = ListValidator(DataclassValidator(NodeRecord))
    edges: list[EdgeRecord] = ListValidator(DataclassValidator(EdgeRecord)), Default([])

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
            if len(node.potential) != self.num_actions:
                raise item_field_error('nodes', index, 'potential', ValidationError(
                    code='invalid_length',
                    reason=f'Potential must have exactly {self.num_actions} entries.',
                ))

        seen_edges: set[tuple[int, int]] = set()
        for index, edge in enumerate(self.edges):
            for field_name in ('u', 'v'):
                if getattr(edge, field_name) >= num_nodes:
                    raise item_field_error('edges', index, field_name, ValidationError(
                        code='invalid_node_id',
                        reason='Edge endpoint is not a node id.',
                    ))
            if (edge.u, edge.v) in seen_edges:
                raise item_field_error('edges', index, None, ValidationError(code='duplicate_edge'))
            seen_edges.add((edge.u, edge.v))
            self._check_table_shape(index, edge.table)

    def _check_table_shape(self, index: int, table: list[list[float]]) -> None:
        shape_error = ValidationError(
            code='invalid_length',
            reason=f'Edge table must have shape {self.num_actions}x{self.num_actions}.',
        )
        if len(table) != self.num_actions:
            raise item_field_error('edges', index, 'table', shape_error)
        for row_index, row in enumerate(table):
            if len(row) != self.num_actions:
                raise item_field_error(
                    'edges', index, 'table', ListItemsValidationError(item_errors={row_index: shape_error}),
                )

    def to_network(self) -> DecisionNetwork:
        potentials: list[list[float]] = [[] for _ in self.nodes]
        for node in self.nodes:
            potentials[node.id] = node.potential
        return DecisionNetwork(
            num_actions=self.num_actions,
            node_potentials=potentials,
            edges=[(edge.u, edge.v, edge.table) for edge in self.edges],
        )


def parse_json_document(data: bytes | str) -> Any:
    """
    Parses a JSON document, raising `ParseError` (with an empty location) on malformed JSON.
    """
    try:
        return json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as error:
        raise ParseError(location='', reason=f'Malformed JSON: {error}') from None


def load_instance(data: bytes | str) -> DecisionNetwork:
    """
    Parses an instance file (JSON) into a `DecisionNetwork`.

    Raises `ParseError` on malformed JSON or if the document does not describe a valid network. The error contains the
    location of the first offending element and the nested validation error.
    """
    document = parse_json_document(data)
    try:
        record = DataclassValidator(InstanceRecord).validate(document)
    except ValidationError as error:
        error_dict = error.to_dict()
        location = error_location(error_dict)
        logger.debug('Invalid instance document at %r: %s', location, error_dict)
        raise ParseError(location=location, validation_error=error_dict, reason='Invalid instance document.') from None
    return record.to_network()


def save_instance(network: DecisionNetwork) -> bytes:
    """
    Serializes a `DecisionNetwork` as instance file (UTF-8 encoded JSON). `NEG_INF` is written as the string `"-inf"`.

    The output is normalized: nodes sorted by id, edges sorted by `(u, v)`, all numbers written as floats, two spaces
    indentation. `save_instance(load_instance(data))` is the identity on normalized documents.
    """
    document = {
        'num_actions': network.num_actions,
        'nodes': [
            {'id': node, 'potential': [format_ext_real(value) for value in network.potential(node)]}
            for node in range(network.num_nodes)
        ],
        'edges': [
            {'u': u, 'v': v, 'table': [[format_ext_real(float(value)) for value in row] for row in table]}
            for u, v, table in network.edges()
        ],
    }
    return (json.dumps(document, indent=2) + '\n').encode('utf-8')
