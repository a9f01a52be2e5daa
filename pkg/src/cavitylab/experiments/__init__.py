"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from .cost import measure_cost
from .coupling import EdgeSample, LemmaReport, check_lemmas, measure_coupling, sample_edges
from .decay import measure_decay
from .misclassification import measure_misclassification
from .moment_identity import (
    MomentIdentityResult,
    measure_mixture_moment_identity,
    measure_moment_identity,
    neighbor_cavity_sum,
)
from .mwis_misclassification import measure_mwis_misclassification, misclassification_bound
from .mwis_ratio import measure_mwis_ratio, ratio_upper_bounds
from .reports import CSV_COLUMNS, ExperimentReport, ReportRow
from .suboptimality import measure_suboptimality
from .trials import build_report, check_depths, check_trials, graph_shape, run_trials, trial_seeds

__all__ = [
    'CSV_COLUMNS',
    'EdgeSample',
    'ExperimentReport',
    'LemmaReport',
    'MomentIdentityResult',
    'ReportRow',
    'build_report',
    'check_depths',
    'check_lemmas',
    'check_trials',
    'graph_shape',
    'measure_cost',
    'measure_coupling',
    'measure_decay',
    'measure_misclassification',
    'measure_mixture_moment_identity',
    'measure_moment_identity',
    'measure_mwis_misclassification',
    'measure_mwis_ratio',
    'measure_suboptimality',
    'misclassification_bound',
    'neighbor_cavity_sum',
    'ratio_upper_bounds',
    'run_trials',
    'sample_edges',
    'trial_seeds',
]
