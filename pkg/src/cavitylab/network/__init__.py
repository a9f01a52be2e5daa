"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from .decision_network import Assignment, DecisionNetwork, EdgeKey, OrientedTable
from .evaluation import evaluate, validate_assignment
from .extended_real import (
    NEG_INF,
    CavityVector,
    ExtReal,
    ext_add,
    ext_max,
    ext_sub,
    format_ext_real,
    is_ext_real,
    is_neg_inf,
)
from .graph_format import is_weighted_graph_document, load_weighted_graph, save_weighted_graph
from .instance_format import load_instance, parse_json_document, save_instance
from .subnetwork_view import SubnetworkView, as_view
from .weighted_graph import WeightedGraph, mask_of, nodes_of

__all__ = [
    'Assignment',
    'CavityVector',
    'DecisionNetwork',
    'EdgeKey',
    'ExtReal',
    'NEG_INF',
    'OrientedTable',
    'SubnetworkView',
    'WeightedGraph',
    'as_view',
    'evaluate',
    'ext_add',
    'ext_max',
    'ext_sub',
    'format_ext_real',
    'is_ext_real',
    'is_neg_inf',
    'is_weighted_graph_document',
    'load_instance',
    'load_weighted_graph',
    'mask_of',
    'nodes_of',
    'parse_json_document',
    'save_instance',
    'save_weighted_graph',
    'validate_assignment',
]
