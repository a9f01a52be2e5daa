"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from cavitylab.network import WeightedGraph
from .cavity_bounds import BoundSign, c_bound, c_exact, parse_bound_sign, suggested_depth
from .greedy import greedy_mis
from .mixture_matrix import MixtureCheck, mixture_matrix, mixture_matrix_check
from .two_phase import MwisRun, delete_nodes, deletion_probability, run_two_phase
from .weight_distributions import Exponential, ExponentialMixture, WeightDistribution, sample_weights

__all__ = [
    'BoundSign',
    'Exponential',
    'ExponentialMixture',
    'MixtureCheck',
    'MwisRun',
    'WeightDistribution',
    'WeightedGraph',
    'c_bound',
    'c_exact',
    'delete_nodes',
    'deletion_probability',
    'greedy_mis',
    'mixture_matrix',
    'mixture_matrix_check',
    'parse_bound_sign',
    'run_two_phase',
    'sample_weights',
    'suggested_depth',
]
