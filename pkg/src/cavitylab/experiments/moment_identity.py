"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math
import time
from dataclasses import dataclass
from typing import Any

from cavitylab.exceptions import InvalidParamsError, InvalidViewError
from cavitylab.helpers import MeanEstimate
from cavitylab.mwis import Exponential, ExponentialMixture, c_exact, sample_weights
from cavitylab.network import WeightedGraph
from cavitylab.oracle import BranchAndBoundLimits
from .reports import ExperimentReport, ReportRow
from .trials import build_report, run_trials

__all__ = [
    'MomentIdentityResult',
    'measure_mixture_moment_identity',
    'measure_moment_identity',
    'neighbor_cavity_sum',
]


@dataclass(frozen=True)
class MomentIdentityResult:
    """
    Monte-Carlo estimates of both sides of a moment identity. The z-score is computed from the paired per-trial
    differences `lhs - rhs`.
    """
    lhs: MeanEstimate
    rhs: MeanEstimate
    difference: MeanEstimate
    z_score: float

    def to_dict(self) -> dict[str, Any]:
        return {
            'lhs': self.lhs.mean,
            'lhs_stderr': self.lhs.stderr,
            'rhs': self.rhs.mean,
            'rhs_stderr': self.rhs.stderr,
            'z_score': self.z_score,
        }


def neighbor_cavity_sum(graph: WeightedGraph, node: int, *, limits: BranchAndBoundLimits) -> float:
    """
    Returns `Σ_l C_{𝒢∖{i, i_1, ..., i_{l-1}}}(i_l)` over the neighbors `i_1 < i_2 < ...` of the node, the quantity
    that node i's exact cavity is `max(0, W_i - ·)` of.
    """
    removed = 1 << node
    total = 0.0
    for neighbor in graph.neighbors(node):
        total += c_exact(graph, neighbor, removed=removed, limits=limits)
        removed |= 1 << neighbor
    return total


def _check_node(topology: WeightedGraph, node: int) -> None:
    if not 0 <= node < topology.num_nodes:
        raise InvalidViewError(node=node, reason='Node is not part of the graph.')


def _result(samples: list[tuple[float, float]]) -> MomentIdentityResult:
    difference = MeanEstimate.from_samples([lhs - rhs for lhs, rhs in samples])
    return MomentIdentityResult(
        lhs=MeanEstimate.from_samples([lhs for lhs, _ in samples]),
        rhs=MeanEstimate.from_samples([rhs for _, rhs in samples]),
        difference=difference,
        z_score=difference.z_score(0.0),
    )


def _report(
    experiment: str,
    topology: WeightedGraph,
    node: int,
    result: MomentIdentityResult,
    model: str,
    config: dict[str, Any],
    seed: int,
    started: float,
) -> ExperimentReport:
    row = ReportRow(
        experiment=experiment,
        model=model,
        graph='fixed',
        n=topology.num_nodes,
        delta=topology.max_degree(),
        r=None,
        trials=result.lhs.count,
        estimate=result.lhs.mean,
        stderr=result.lhs.stderr,
        excluded=0,
        seed=seed,
        extra={'node': node, **result.to_dict()},
    )
    return build_report(experiment, config, seed, [row], started)


def measure_moment_identity(
    topology: WeightedGraph,
    node: int,
    trials: int,
    *,
    seed: int = 0,
    threads: int | None = None,
    limits: BranchAndBoundLimits = BranchAndBoundLimits(),
) -> ExperimentReport:
    """
    Checks `E[exp(-C(i))] = 1 - (1/2) E[exp(-Σ_l C_{𝒢∖{i, i_1, ..., i_{l-1}}}(i_l))]` for exponential(1) weights on the
    fixed graph `topology` (its weights are ignored). Exact cavities are computed with branch-and-bound in every trial.

    The row estimate is the left-hand side, `extra` holds the right-hand side and the z-score of the difference.
    """
    started = time.perf_counter()
    _check_node(topology, node)
    distribution = Exponential()

    def trial(trial_seed: int) -> tuple[float, float]:
        graph = topology.with_weights(sample_weights(topology.num_nodes, distribution, trial_seed))
        cavity = c_exact(graph, node, limits=limits)
        return math.exp(-cavity), 1 - 0.5 * math.exp(-neighbor_cavity_sum(graph, node, limits=limits))

    result = _result(run_trials(trial, seed, trials, threads=threads))
    config = {'edges': [list(edge) for edge in topology.edges], 'node': node, 'trials': trials}
    return _report('moment-check', topology, node, result, distribution.name, config, seed, started)


def measure_mixture_moment_identity(
    topology: WeightedGraph,
    node: int,
    rho: float,
    delta: int,
    component: int,
    trials: int,
    *,
    seed: int = 0,
    threads: int | None = None,
    limits: BranchAndBoundLimits = BranchAndBoundLimits(),
) -> ExperimentReport:
    """
    Checks the moment identity of the exponential mixture with rates `α_k = ρ^k` for component j = `component`:

    ```
    E[exp(-α_j C(i))] = 1 - (1/Δ) Σ_k α_j / (α_j + α_k) E[exp(-α_k Σ_l C_{𝒢∖{i, i_1, ..., i_{l-1}}}(i_l))]
    ```
    """
    started = time.perf_counter()
    _check_node(topology, node)
    distribution = ExponentialMixture(rho=rho, delta=delta)
    if type(component) is not int or not 1 <= component <= delta:
        raise InvalidParamsError(parameter='component', reason=f'Component must be in [1, {delta}].')
    rates = [float(rate) for rate in distribution.rates]
    alpha = rates[component - 1]

    def trial(trial_seed: int) -> tuple[float, float]:
        graph = topology.with_weights(sample_weights(topology.num_nodes, distribution, trial_seed))
        cavity = c_exact(graph, node, limits=limits)
        neighbor_sum = neighbor_cavity_sum(graph, node, limits=limits)
        rhs = 1 - sum(alpha / (alpha + rate) * math.exp(-rate * neighbor_sum) for rate in rates) / delta
        return math.exp(-alpha * cavity), rhs

    result = _result(run_trials(trial, seed, trials, threads=threads))
    config = {
        'edges': [list(edge) for edge in topology.edges],
        'node': node,
        'rho': rho,
        'delta': delta,
        'component': component,
        'trials': trials,
    }
    return _report('mixture-moment-check', topology, node, result, distribution.name, config, seed, started)
