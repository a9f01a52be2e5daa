"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import logging
import time
from collections.abc import Callable, Iterable, Mapping, Sequence
from typing import Any, TypeVar

from cavitylab.exceptions import InvalidDepthError, InvalidParamsError
from cavitylab.helpers import StreamKey, keyed_seed, ordered_map
from cavitylab.models import GraphSpec
from .reports import ExperimentReport, ReportRow

__all__ = [
    'build_report',
    'check_depths',
    'check_trials',
    'graph_shape',
    'run_trials',
    'trial_seeds',
]

logger = logging.getLogger(__name__)

T_Outcome = TypeVar('T_Outcome')


def check_trials(trials: int) -> None:
    if type(trials) is not int or trials < 1:
        raise InvalidParamsError(parameter='trials', reason='Number of trials must be a positive integer.')


def check_depths(depths: Iterable[int | None], *, allow_full: bool = False) -> tuple[int | None, ...]:
    """
    Validates a list of depths. None stands for the expansion without depth cap and is only accepted with
    `allow_full`.
    """
    checked = tuple(depths)
    if len(checked) == 0:
        raise InvalidParamsError(parameter='depths', reason='At least one depth is needed.')
    for depth in checked:
        if depth is None and allow_full:
            continue
        if type(depth) is not int or depth < 0:
            raise InvalidDepthError(depth=depth, parameter='depths', reason='Depths must be non-negative integers.')
    return checked


def trial_seeds(seed: int, trials: int) -> list[int]:
    """
    Seeds of the single trials, derived from the master seed and the trial index.
    """
    return [keyed_seed(seed, StreamKey.TRIAL, trial) for trial in range(trials)]


def run_trials(
    function: Callable[[int], T_Outcome],
    seed: int,
    trials: int,
    *,
    threads: int | None = None,
) -> list[T_Outcome]:
    """
    Runs `function(trial_seed)` for every trial and returns the outcomes in trial order. Trials run in parallel, the
    outcomes do not depend on the number of threads.
    """
    check_trials(trials)
    return ordered_map(function, trial_seeds(seed, trials), threads=threads)


def build_report(
    experiment: str,
    config: Mapping[str, Any],
    seed: int,
    rows: Sequence[ReportRow],
    started: float,
) -> ExperimentReport:
    wall_time = time.perf_counter() - started
    logger.info('Experiment %s finished with %d rows in %.2f s.', experiment, len(rows), wall_time)
    return ExperimentReport(experiment=experiment, config=config, seed=seed, rows=tuple(rows), wall_time=wall_time)


def graph_shape(graph_spec: GraphSpec) -> tuple[int, int]:
    """
    Returns `(n, Δ)` of the graph family, Δ being the maximum degree of the built graph.
    """
    graph = graph_spec.build()
    return graph.number_of_nodes(), max((degree for _, degree in graph.degree()), default=0)
