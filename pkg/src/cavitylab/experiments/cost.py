"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import time
from collections.abc import Sequence

from cavitylab.cavity import DEFAULT_MAX_CALLS, BoundaryCondition, CallBudget, ce
from cavitylab.exceptions import InvalidParamsError
from cavitylab.models import ModelSpec, generate_network
from .reports import ExperimentReport, ReportRow
from .trials import build_report, check_depths

__all__ = [
    'measure_cost',
]


def measure_cost(
    spec: ModelSpec,
    depths: Sequence[int],
    *,
    root: int = 0,
    action: int = 1,
    boundary: BoundaryCondition | None = None,
    max_calls: int = DEFAULT_MAX_CALLS,
) -> ExperimentReport:
    """
    Counts the recursive calls of `CE[𝒢, root, r, action]` on the instance of `spec` for every depth r.

    Every row reports the call count as estimate together with the worst-case bound `r (ΔT)^r` and the growth constant
    `calls / ((Δ-1)(T-1))^r`. Requests for action 0 return without recursion, so on locally tree-like graphs the count
    grows like `((Δ-1)(T-1))^r` and the growth constant is roughly independent of r.
    """
    started = time.perf_counter()
    checked_depths: tuple[int, ...] = check_depths(depths)  # type: ignore[assignment]
    network = generate_network(spec)
    if not 0 <= root < network.num_nodes:
        raise InvalidParamsError(parameter='root', reason='Root must be a node of the network.')

    delta = network.max_degree()
    num_actions = network.num_actions
    growth = max(1, (delta - 1) * (num_actions - 1))

    rows = []
    for depth in checked_depths:
        budget = CallBudget(max_calls)
        ce(network, root, depth, action, boundary, budget=budget)
        rows.append(ReportRow(
            experiment='cost',
            model=spec.kind.name,
            graph=spec.graph.kind,
            n=network.num_nodes,
            delta=delta,
            r=depth,
            trials=1,
            estimate=float(budget.calls),
            stderr=0.0,
            excluded=0,
            seed=spec.seed,
            extra={
                'calls': budget.calls,
                'bound': depth * (delta * num_actions) ** depth,
                'growth_constant': budget.calls / growth ** depth,
            },
        ))

    config = {**spec.to_dict(), 'depths': list(checked_depths), 'root': root, 'action': action}
    return build_report('cost', config, spec.seed, rows, started)
