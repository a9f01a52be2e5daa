"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import time
from collections.abc import Sequence

from cavitylab.cavity import DEFAULT_MAX_CALLS, BoundaryCondition, ce_decide_all
from cavitylab.exceptions import InfeasibleError
from cavitylab.helpers import MeanEstimate
from cavitylab.models import ModelSpec, generate_network
from cavitylab.network import NEG_INF
from cavitylab.oracle import BruteForceLimits, solve_brute
from .reports import ExperimentReport, ReportRow
from .trials import build_report, check_depths, graph_shape, run_trials

__all__ = [
    'measure_suboptimality',
]


def _suboptimality_trial(
    spec: ModelSpec,
    depths: Sequence[int | None],
    boundary: BoundaryCondition | None,
    limits: BruteForceLimits,
    max_calls: int,
    trial_seed: int,
) -> list[float | None]:
    network = generate_network(spec.with_seed(trial_seed))
    try:
        optimum = solve_brute(network, limits=limits).optimum
    except InfeasibleError:
        return [None] * len(depths)

    gaps: list[float | None] = []
    for depth in depths:
        decisions = ce_decide_all(network, depth, boundary, max_calls=max_calls, threads=1)
        if decisions.total is None or decisions.total == NEG_INF:
            gaps.append(None)
        else:
            gaps.append(optimum - decisions.total)
    return gaps


def measure_suboptimality(
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
    Estimates the expected gap `J - F(x^r)` between the optimum and the objective of the cavity expansion decisions.

    Trials whose decision assignment violates a hard constraint (objective `NEG_INF`) or whose expansion failed are
    infeasible outcomes: they are counted in `excluded` and in `extra['infeasible']`, not averaged.
    """
    started = time.perf_counter()
    checked_depths = check_depths(depths, allow_full=True)
    num_nodes, delta = graph_shape(spec.graph)

    outcomes = run_trials(
        lambda trial_seed: _suboptimality_trial(spec, checked_depths, boundary, limits, max_calls, trial_seed),
        seed,
        trials,
        threads=threads,
    )

    rows = []
    for index, depth in enumerate(checked_depths):
        samples = [outcome[index] for outcome in outcomes if outcome[index] is not None]
        estimate = MeanEstimate.from_samples(samples)  # type: ignore[arg-type]
        infeasible = trials - estimate.count
        rows.append(ReportRow(
            experiment='subopt',
            model=spec.kind.name,
            graph=spec.graph.kind,
            n=num_nodes,
            delta=delta,
            r=depth,
            trials=estimate.count,
            estimate=estimate.mean,
            stderr=estimate.stderr,
            excluded=infeasible,
            seed=seed,
            extra={'infeasible': infeasible},
        ))

    config = {**spec.to_dict(), 'depths': list(checked_depths), 'trials': trials}
    return build_report('subopt', config, seed, rows, started)
