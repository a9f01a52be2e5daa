"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from .boundary_conditions import (
    BoundaryCondition,
    ConstantBoundary,
    PotentialGapBoundary,
    SeededUniformBoundary,
    ZeroBoundary,
)
from .cavity_expansion import DEFAULT_MAX_CALLS, CallBudget, ce, ce_full, ce_vector
from .decisions import CeDecisions, CeResult, ce_decide_all, ce_result, decide
from .modified_network import modified_network
from .partial_cavity import BinaryEdgeTerms, binary_edge_terms, binary_mu, mu, mu_vector

__all__ = [
    'BinaryEdgeTerms',
    'BoundaryCondition',
    'CallBudget',
    'CeDecisions',
    'CeResult',
    'ConstantBoundary',
    'DEFAULT_MAX_CALLS',
    'PotentialGapBoundary',
    'SeededUniformBoundary',
    'ZeroBoundary',
    'binary_edge_terms',
    'binary_mu',
    'ce',
    'ce_decide_all',
    'ce_full',
    'ce_result',
    'ce_vector',
    'decide',
    'modified_network',
    'mu',
    'mu_vector',
]
