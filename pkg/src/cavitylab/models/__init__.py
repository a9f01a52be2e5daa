"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from .conditions import ConditionReport, check_conditions, cond_first, cond_third, thm1_condition, thm2_condition
from .coupling import CouplingParams, GaussianMoments, coupling_params, gaussian_moments, k_phi
from .encoders import (
    ColoringProblem,
    Max2SatProblem,
    MwisProblem,
    decode_mwis,
    encode_coloring,
    encode_max2sat,
    encode_mwis,
    encode_problem,
)
from .generators import covariance_factor, generate, generate_network, sample_latent_causes
from .graph_spec import (
    CompleteGraph,
    CycleGraph,
    EmptyGraph,
    ErdosRenyiBoundedGraph,
    GraphSpec,
    GridGraph,
    PathGraph,
    RandomRegularGraph,
    RandomTreeGraph,
    StarGraph,
)
from .model_spec import (
    GaussianCorrelatedModel,
    GaussianModel,
    MapEstimationModel,
    ModelKind,
    ModelSpec,
    MwisExpModel,
    MwisMixtureModel,
    UniformModel,
)

__all__ = [
    'ColoringProblem',
    'CompleteGraph',
    'ConditionReport',
    'CouplingParams',
    'CycleGraph',
    'EmptyGraph',
    'ErdosRenyiBoundedGraph',
    'GaussianCorrelatedModel',
    'GaussianModel',
    'GaussianMoments',
    'GraphSpec',
    'GridGraph',
    'MapEstimationModel',
    'Max2SatProblem',
    'ModelKind',
    'ModelSpec',
    'MwisExpModel',
    'MwisMixtureModel',
    'MwisProblem',
    'PathGraph',
    'RandomRegularGraph',
    'RandomTreeGraph',
    'StarGraph',
    'UniformModel',
    'check_conditions',
    'cond_first',
    'cond_third',
    'coupling_params',
    'covariance_factor',
    'decode_mwis',
    'encode_coloring',
    'encode_max2sat',
    'encode_mwis',
    'encode_problem',
    'gaussian_moments',
    'generate',
    'generate_network',
    'k_phi',
    'sample_latent_causes',
    'thm1_condition',
    'thm2_condition',
]
