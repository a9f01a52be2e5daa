"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import time
from collections.abc import Sequence

from cavitylab.exceptions import InvalidParamsError
from cavitylab.helpers import MeanEstimate
from cavitylab.models import GraphSpec
from cavitylab.mwis import (
    BoundSign,
    Exponential,
    WeightDistribution,
    c_bound,
    c_exact,
    delete_nodes,
    deletion_probability,
    sample_weights,
)
from cavitylab.network import WeightedGraph
from cavitylab.oracle import BranchAndBoundLimits
from .reports import ExperimentReport, ReportRow
from .trials import build_report, check_depths, run_trials

__all__ = [
    'measure_mwis_misclassification',
    'misclassification_bound',
]


def misclassification_bound(epsilon: float, depth: int) -> float:
    """
    Bound `3 (1 - ε²/16)^{2r}` on the probability that the truncated recursion of depth r misclassifies a node of the
    graph after the deletion phase.
    """
    return 3 * (1 - deletion_probability(epsilon)) ** (2 * depth)


def _bounds_by_parity(depth: int) -> tuple[BoundSign, BoundSign]:
    """
    Returns `(lower, upper)`: for even depths the minus recursion is the lower bound, for odd depths the plus
    recursion.
    """
    if depth % 2 == 0:
        return BoundSign.MINUS, BoundSign.PLUS
    return BoundSign.PLUS, BoundSign.MINUS


def _mwis_misclassification_trial(
    topology: WeightedGraph,
    distribution: WeightDistribution,
    epsilon: float,
    depths: Sequence[int],
    limits: BranchAndBoundLimits,
    trial_seed: int,
) -> list[tuple[float, float]] | None:
    graph = topology.with_weights(sample_weights(topology.num_nodes, distribution, trial_seed))
    deleted = delete_nodes(graph, epsilon, trial_seed)
    kept = [node for node in range(graph.num_nodes) if not deleted >> node & 1]
    if not kept:
        return None

    exact = {node: c_exact(graph, node, removed=deleted, limits=limits) for node in kept}
    fractions = []
    for depth in depths:
        lower_sign, upper_sign = _bounds_by_parity(depth)
        false_positive = false_negative = 0
        for node in kept:
            if exact[node] == 0 and c_bound(graph, node, depth, upper_sign, removed=deleted) > 0:
                false_positive += 1
            if exact[node] > 0 and c_bound(graph, node, depth, lower_sign, removed=deleted) == 0:
                false_negative += 1
        fractions.append((false_positive / len(kept), false_negative / len(kept)))
    return fractions


def measure_mwis_misclassification(
    graph_spec: GraphSpec,
    epsilon: float,
    depths: Sequence[int],
    trials: int,
    *,
    distribution: WeightDistribution | None = None,
    seed: int = 0,
    threads: int | None = None,
    limits: BranchAndBoundLimits = BranchAndBoundLimits(),
) -> ExperimentReport:
    """
    Estimates how often the truncated recursion of depth r misclassifies a node of the graph after the deletion phase:
    `P(C = 0, upper bound > 0)` (false positive) plus `P(C > 0, lower bound = 0)` (false negative), over all kept
    nodes. Every row reports the theoretical bound `3 (1 - ε²/16)^{2r}` next to the estimate, it is not checked.
    """
    started = time.perf_counter()
    if not 0 < epsilon < 1:
        raise InvalidParamsError(parameter='epsilon', reason='Epsilon must be in (0, 1).')
    checked_depths: tuple[int, ...] = check_depths(depths)  # type: ignore[assignment]
    distribution = distribution or Exponential()
    nx_graph = graph_spec.build()
    topology = WeightedGraph(weights=[1.0] * nx_graph.number_of_nodes(), edges=list(nx_graph.edges()))

    outcomes = run_trials(
        lambda trial_seed: _mwis_misclassification_trial(
            topology, distribution, epsilon, checked_depths, limits, trial_seed,
        ),
        seed,
        trials,
        threads=threads,
    )
    valid = [outcome for outcome in outcomes if outcome is not None]

    rows = []
    for index, depth in enumerate(checked_depths):
        estimate = MeanEstimate.from_samples([sum(outcome[index]) for outcome in valid])
        false_positive = MeanEstimate.from_samples([outcome[index][0] for outcome in valid])
        false_negative = MeanEstimate.from_samples([outcome[index][1] for outcome in valid])
        rows.append(ReportRow(
            experiment='mwis-misclass',
            model=distribution.name,
            graph=graph_spec.kind,
            n=topology.num_nodes,
            delta=topology.max_degree(),
            r=depth,
            trials=estimate.count,
            estimate=estimate.mean,
            stderr=estimate.stderr,
            excluded=trials - estimate.count,
            seed=seed,
            extra={
                'false_positive': false_positive.mean,
                'false_negative': false_negative.mean,
                'bound': misclassification_bound(epsilon, depth),
            },
        ))

    config = {
        'graph': graph_spec.to_dict(),
        'distribution': distribution.name,
        'epsilon': epsilon,
        'depths': list(checked_depths),
        'trials': trials,
    }
    return build_report('mwis-misclass', config, seed, rows, started)
