"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass

from cavitylab.cavity import DEFAULT_MAX_CALLS, BoundaryCondition, ce_decide_all
from cavitylab.exceptions import InfeasibleError
from cavitylab.helpers import MeanEstimate
from cavitylab.models import ModelSpec, generate_network
from cavitylab.oracle import BruteForceLimits, solve_brute
from .reports import ExperimentReport, ReportRow
from .trials import build_report, check_depths, graph_shape, run_trials

__all__ = [
    'measure_misclassification',
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _MisclassificationTrial:
    # None if the trial was discarded (infeasible or non-unique optimum)
    fractions: tuple[float | None, ...] | None


def _misclassification_trial(
    spec: ModelSpec,
    depths: Sequence[int | None],
    boundary: BoundaryCondition | None,
    limits: BruteForceLimits,
    max_calls: int,
    trial_seed: int,
) -> _MisclassificationTrial:
    network = generate_network(spec.with_seed(trial_seed))
    try:
        exact = solve_brute(network, limits=limits)
    except InfeasibleError:
        return _MisclassificationTrial(fractions=None)
    if not exact.unique:
        return _MisclassificationTrial(fractions=None)

    fractions: list[float | None] = []
    for depth in depths:
        decisions = ce_decide_all(network, depth, boundary, max_calls=max_calls, threads=1)
        if decisions.assignment is None:
            fractions.append(None)
            continue
        mismatches = sum(1 for x, y in zip(decisions.assignment, exact.argmax) if x != y)
        fractions.append(mismatches / network.num_nodes)
    return _MisclassificationTrial(fractions=tuple(fractions))


def measure_misclassification(
    spec: ModelSpec,
    depths: Sequence[int | None],
    trials: int,
    *,
    boundary: BoundaryCondition | None = None,
    seed: int = 0,
    threads: int | None = None,
    limits: BruteForceLimits = BruteForceLimits(),
    max_calls: int = DEFAULT_MAX_CALLS,
) -> ExperimentReport:
    """
    Estimates the misclassification rate `P(x^r_u != x_u)` of the cavity expansion decisions against the exact optimal
    assignment from brute force, over all (instance, node) pairs. A depth of None stands for the expansion without
    depth cap.

    Instances without a unique optimum are discarded and counted in `excluded`, as are depths at which some node's
    expansion failed. The standard error is computed from the per-trial fractions.
    """
    started = time.perf_counter()
    checked_depths = check_depths(depths, allow_full=True)
    num_nodes, delta = graph_shape(spec.graph)

    outcomes = run_trials(
        lambda trial_seed: _misclassification_trial(spec, checked_depths, boundary, limits, max_calls, trial_seed),
        seed,
        trials,
        threads=threads,
    )
    discarded = sum(1 for outcome in outcomes if outcome.fractions is None)
    if discarded > 0:
        logger.warning('Misclassification: %d of %d trials discarded (no unique optimum).', discarded, trials)

    rows = []
    for index, depth in enumerate(checked_depths):
        samples = [
            outcome.fractions[index] for outcome in outcomes
            if outcome.fractions is not None and outcome.fractions[index] is not None
        ]
        estimate = MeanEstimate.from_samples(samples)  # type: ignore[arg-type]
        rows.append(ReportRow(
            experiment='misclass',
            model=spec.kind.name,
            graph=spec.graph.kind,
            n=num_nodes,
            delta=delta,
            r=depth,
            trials=estimate.count,
            estimate=estimate.mean,
            stderr=estimate.stderr,
            excluded=trials - estimate.count,
            seed=seed,
            extra={'non_unique': discarded},
        ))

    config = {**spec.to_dict(), 'depths': list(checked_depths), 'trials': trials}
    return build_report('misclass', config, seed, rows, started)
