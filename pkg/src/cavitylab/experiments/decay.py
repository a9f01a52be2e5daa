"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import logging
import time
from collections.abc import Sequence

from cavitylab.cavity import DEFAULT_MAX_CALLS, BoundaryCondition, CallBudget, PotentialGapBoundary, ZeroBoundary, ce
from cavitylab.exceptions import InvalidOptionException, InvalidParamsError, UndefinedArithmeticError
from cavitylab.helpers import MeanEstimate, StreamKey, keyed_rng
from cavitylab.models import ModelSpec, generate_network
from cavitylab.network import NEG_INF
from .reports import ExperimentReport, ReportRow
from .trials import build_report, check_depths, graph_shape, run_trials

__all__ = [
    'measure_decay',
]

logger = logging.getLogger(__name__)


def _decay_trial(
    spec: ModelSpec,
    depths: Sequence[int],
    boundaries: tuple[BoundaryCondition, BoundaryCondition],
    action: int,
    max_calls: int,
    trial_seed: int,
) -> list[float | None]:
    network = generate_network(spec.with_seed(trial_seed))
    if not 0 < action < network.num_actions:
        raise InvalidParamsError(parameter='action', reason=f'Action must be in [1, {network.num_actions}).')
    root = int(keyed_rng(trial_seed, StreamKey.ROOT).integers(network.num_nodes))

    gaps: list[float | None] = []
    for depth in depths:
        try:
            first, second = (
                ce(network, root, depth, action, boundary, budget=CallBudget(max_calls)) for boundary in boundaries
            )
        except UndefinedArithmeticError:
            gaps.append(None)
            continue
        gaps.append(None if NEG_INF in (first, second) else abs(first - second))
    return gaps


def measure_decay(
    spec: ModelSpec,
    depths: Sequence[int],
    trials: int,
    *,
    boundaries: tuple[BoundaryCondition, BoundaryCondition] | None = None,
    action: int = 1,
    seed: int = 0,
    threads: int | None = None,
    max_calls: int = DEFAULT_MAX_CALLS,
) -> ExperimentReport:
    """
    Estimates the correlation decay `E|CE[𝒢, u, r, x, 𝒞] - CE[𝒢, u, r, x, 𝒞′]|` for every depth r, for a pair of
    boundary conditions (default: zero vs. potential gap) and action x (default 1).

    Every trial draws a fresh instance of the model on the (fixed) graph of `spec` and a uniformly random root u.
    The same instance and root are used for all depths of a trial. Trials in which the expansion is undefined or
    returns `NEG_INF` are excluded and counted per depth.
    """
    started = time.perf_counter()
    checked_depths: tuple[int, ...] = check_depths(depths)  # type: ignore[assignment]
    if boundaries is None:
        boundaries = (ZeroBoundary(), PotentialGapBoundary())
    if len(boundaries) != 2 or boundaries[0].name == boundaries[1].name:
        raise InvalidOptionException('Decay needs two distinct boundary conditions.')

    num_nodes, delta = graph_shape(spec.graph)
    outcomes = run_trials(
        lambda trial_seed: _decay_trial(spec, checked_depths, boundaries, action, max_calls, trial_seed),
        seed,
        trials,
        threads=threads,
    )

    rows = []
    for index, depth in enumerate(checked_depths):
        gaps = [outcome[index] for outcome in outcomes]
        samples = [gap for gap in gaps if gap is not None]
        estimate = MeanEstimate.from_samples(samples)
        excluded = len(gaps) - len(samples)
        if excluded > 0:
            logger.warning('Decay at depth %d: %d of %d trials excluded as infeasible.', depth, excluded, len(gaps))
        rows.append(ReportRow(
            experiment='decay',
            model=spec.kind.name,
            graph=spec.graph.kind,
            n=num_nodes,
            delta=delta,
            r=depth,
            trials=estimate.count,
            estimate=estimate.mean,
            stderr=estimate.stderr,
            excluded=excluded,
            seed=seed,
            extra={'boundaries': [boundary.name for boundary in boundaries], 'action': action},
        ))

    config = {
        **spec.to_dict(),
        'depths': list(checked_depths),
        'trials': trials,
        'boundaries': [boundary.name for boundary in boundaries],
        'action': action,
    }
    return build_report('decay', config, seed, rows, started)
