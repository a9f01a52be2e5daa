"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import logging
import math
import time

from cavitylab.helpers import MeanEstimate
from cavitylab.models import GraphSpec
from cavitylab.mwis import Exponential, WeightDistribution, sample_weights
from cavitylab.network import WeightedGraph
from cavitylab.oracle import BranchAndBoundLimits, max_independent_set_size, max_weight_independent_set
from .reports import ExperimentReport, ReportRow
from .trials import build_report, run_trials

__all__ = [
    'measure_mwis_ratio',
    'ratio_upper_bounds',
]

logger = logging.getLogger(__name__)


def ratio_upper_bounds(delta: int) -> tuple[float | None, float]:
    """
    Returns the two upper bounds of `E[W(I*)] / |I^M|` for maximum degree Δ: the relaxed bound `10 log Δ` (None for
    Δ < 2) and the tighter `log(Δ + 1) + 4`.
    """
    relaxed = 10 * math.log(delta) if delta >= 2 else None
    return relaxed, math.log(delta + 1) + 4


def measure_mwis_ratio(
    graph_spec: GraphSpec,
    trials: int,
    *,
    distribution: WeightDistribution | None = None,
    seed: int = 0,
    threads: int | None = None,
    limits: BranchAndBoundLimits = BranchAndBoundLimits(),
) -> ExperimentReport:
    """
    Estimates the ratio `E[W(I*)] / |I^M|` of the expected maximum weight of an independent set (exponential(1)
    weights by default) to the maximum cardinality of an independent set, on a fixed graph.

    The graph is built once, the weights are drawn per trial. The row reports both upper bounds and whether the lower
    bound `ratio >= 1 - 4 stderr` holds. None of the bounds is enforced: the upper bounds only hold for large n, and a
    failed lower bound is logged as a warning and reported as `lower_bound_ok = False`. The lower bound holds for
    exponential(1) weights, other distributions with a mean below 1 fail it.
    """
    started = time.perf_counter()
    distribution = distribution or Exponential()
    nx_graph = graph_spec.build()
    num_nodes = nx_graph.number_of_nodes()
    topology = WeightedGraph(weights=[1.0] * num_nodes, edges=list(nx_graph.edges()))
    delta = topology.max_degree()
    cardinality = max_independent_set_size(topology, limits=limits)

    def trial(trial_seed: int) -> float:
        graph = topology.with_weights(sample_weights(num_nodes, distribution, trial_seed))
        return max_weight_independent_set(graph, limits=limits)[0]

    weights = MeanEstimate.from_samples(run_trials(trial, seed, trials, threads=threads))
    assert weights.mean is not None and weights.stderr is not None

    ratio = weights.mean / cardinality if cardinality > 0 else None
    ratio_stderr = weights.stderr / cardinality if cardinality > 0 else None
    relaxed_bound, tight_bound = ratio_upper_bounds(delta)
    lower_bound_ok = ratio is not None and ratio_stderr is not None and ratio >= 1 - 4 * ratio_stderr
    if ratio is not None and not lower_bound_ok:
        logger.warning('MWIS ratio %.4f is below 1 by more than 4 standard errors.', ratio)

    row = ReportRow(
        experiment='mwis-ratio',
        model=distribution.name,
        graph=graph_spec.kind,
        n=num_nodes,
        delta=delta,
        r=None,
        trials=weights.count,
        estimate=ratio,
        stderr=ratio_stderr,
        excluded=0,
        seed=seed,
        extra={
            'mean_weight': weights.mean,
            'max_independent_set': cardinality,
            'bound_10_log_delta': relaxed_bound,
            'bound_log_delta_plus_4': tight_bound,
            'lower_bound_ok': lower_bound_ok,
        },
    )
    config = {'graph': graph_spec.to_dict(), 'distribution': distribution.name, 'trials': trials}
    return build_report('mwis-ratio', config, seed, [row], started)
