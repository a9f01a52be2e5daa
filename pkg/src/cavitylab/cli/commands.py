"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import json
import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

import networkx as nx

from cavitylab.cavity import BoundaryCondition, PotentialGapBoundary, ZeroBoundary, ce_decide_all
from cavitylab.experiments import (
    ExperimentReport,
    check_lemmas,
    measure_coupling,
    measure_decay,
    measure_misclassification,
    measure_mixture_moment_identity,
    measure_moment_identity,
    measure_mwis_misclassification,
    measure_mwis_ratio,
    measure_suboptimality,
)
from cavitylab.models import (
    CompleteGraph,
    CycleGraph,
    EmptyGraph,
    ErdosRenyiBoundedGraph,
    GaussianModel,
    GraphSpec,
    GridGraph,
    MapEstimationModel,
    ModelKind,
    ModelSpec,
    MwisExpModel,
    MwisMixtureModel,
    PathGraph,
    RandomRegularGraph,
    RandomTreeGraph,
    StarGraph,
    UniformModel,
    check_conditions,
    decode_mwis,
    encode_mwis,
    generate,
)
from cavitylab.mwis import Exponential, ExponentialMixture, WeightDistribution, run_two_phase
from cavitylab.network import (
    DecisionNetwork,
    WeightedGraph,
    is_weighted_graph_document,
    load_instance,
    load_weighted_graph,
    parse_json_document,
    save_instance,
    save_weighted_graph,
)
from cavitylab.oracle import solve_brute, solve_mwis_bnb, solve_tree
from .config import CliConfig

__all__ = [
    'COMMAND_HANDLERS',
    'build_graph_spec',
    'build_model_kind',
    'build_model_spec',
    'load_any_instance',
]

logger = logging.getLogger(__name__)


def build_graph_spec(config: CliConfig) -> GraphSpec:
    graph_specs: dict[str, Callable[[], GraphSpec]] = {
        'cycle': lambda: CycleGraph(n=config.n, seed=config.graph_seed),
        'path': lambda: PathGraph(n=config.n, seed=config.graph_seed),
        'grid': lambda: GridGraph(rows=config.rows, cols=config.cols, seed=config.graph_seed),
        'complete': lambda: CompleteGraph(n=config.n, seed=config.graph_seed),
        'star': lambda: StarGraph(n=config.n, seed=config.graph_seed),
        'empty': lambda: EmptyGraph(n=config.n, seed=config.graph_seed),
        'random_regular': lambda: RandomRegularGraph(n=config.n, d=config.d, seed=config.graph_seed),
        'erdos_renyi': lambda: ErdosRenyiBoundedGraph(
            n=config.n, p=config.edge_p, dmax=config.dmax, seed=config.graph_seed,
        ),
        'tree': lambda: RandomTreeGraph(n=config.n, seed=config.graph_seed),
    }
    return graph_specs[config.graph]()


def build_model_kind(config: CliConfig) -> ModelKind:
    model_kinds: dict[str, Callable[[], ModelKind]] = {
        'uniform': lambda: UniformModel(i1=config.i1, i2=config.i2),
        'gaussian': lambda: GaussianModel(sigma_e=config.sigma_e, sigma_p=config.sigma_p),
        'map_estimation': lambda: MapEstimationModel(p=config.p, sigma_o=config.sigma_o),
        'mwis_exp': lambda: MwisExpModel(),
        'mwis_mixture': lambda: MwisMixtureModel(rho=config.rho, delta=config.components),
    }
    assert config.model is not None
    return model_kinds[config.model]()


def build_model_spec(config: CliConfig) -> ModelSpec:
    return ModelSpec(kind=build_model_kind(config), graph=build_graph_spec(config), seed=config.seed)


def _weight_distribution(config: CliConfig) -> WeightDistribution:
    if config.model == 'mwis_mixture':
        return ExponentialMixture(rho=config.rho, delta=config.components)
    return Exponential()


def _boundary(config: CliConfig) -> BoundaryCondition:
    if config.boundary == 'potential_gap':
        return PotentialGapBoundary()
    return ZeroBoundary()


def load_any_instance(path: str) -> DecisionNetwork | WeightedGraph:
    """
    Reads an instance file, either a decision network document or a weighted-graph document.
    """
    data = Path(path).read_bytes()
    if is_weighted_graph_document(parse_json_document(data)):
        return load_weighted_graph(data)
    return load_instance(data)


def _write(path: str | None, content: bytes) -> None:
    if path is None:
        sys.stdout.buffer.write(content)
        sys.stdout.flush()
    else:
        Path(path).write_bytes(content)


def _write_json(config: CliConfig, payload: dict[str, Any]) -> None:
    document = {'config': config.to_dict(), **payload}
    _write(config.output, (json.dumps(document, indent=2) + '\n').encode('utf-8'))


def _write_report(config: CliConfig, report: ExperimentReport) -> None:
    json_content = json.dumps({'config': config.to_dict(), 'report': report.to_dict()}, indent=2) + '\n'
    if config.format == 'csv':
        _write(config.output, report.to_csv().encode('utf-8'))
    else:
        _write(config.output, json_content.encode('utf-8'))
    if config.json_out is not None:
        Path(config.json_out).write_bytes(json_content.encode('utf-8'))


def run_gen(config: CliConfig) -> None:
    instance = generate(build_model_spec(config))
    if isinstance(instance, WeightedGraph):
        _write(config.output, save_weighted_graph(instance))
    else:
        _write(config.output, save_instance(instance))


def run_solve_exact(config: CliConfig) -> None:
    assert config.input is not None
    instance = load_any_instance(config.input)
    if isinstance(instance, WeightedGraph):
        method = 'branch_and_bound'
        solution = solve_mwis_bnb(instance)
    elif instance.num_nodes == 0 or nx.is_forest(instance.to_networkx()):
        method = 'tree'
        solution = solve_tree(instance).solution
    else:
        method = 'brute_force'
        solution = solve_brute(instance)
    _write_json(config, {'method': method, **solution.to_dict()})


def run_ce(config: CliConfig) -> None:
    assert config.input is not None
    instance = load_any_instance(config.input)
    network = encode_mwis(instance) if isinstance(instance, WeightedGraph) else instance
    depth = None if config.full else config.depth
    decisions = ce_decide_all(network, depth, _boundary(config), threads=config.threads)
    _write_json(config, decisions.to_dict())


def run_mwis(config: CliConfig) -> None:
    assert config.input is not None and config.depth is not None
    instance = load_any_instance(config.input)
    graph = instance if isinstance(instance, WeightedGraph) else decode_mwis(instance)
    run = run_two_phase(graph, config.epsilon, config.depth, config.seed, bound=config.bound, threads=config.threads)
    _write_json(config, {'run': run.to_dict()})


def run_decay(config: CliConfig) -> None:
    report = measure_decay(
        build_model_spec(config), config.depths, config.trials, seed=config.seed, threads=config.threads,
    )
    _write_report(config, report)


def run_misclass(config: CliConfig) -> None:
    report = measure_misclassification(
        build_model_spec(config), config.depths, config.trials,
        boundary=_boundary(config), seed=config.seed, threads=config.threads,
    )
    _write_report(config, report)


def run_subopt(config: CliConfig) -> None:
    report = measure_suboptimality(
        build_model_spec(config), config.depths, config.trials,
        boundary=_boundary(config), seed=config.seed, threads=config.threads,
    )
    _write_report(config, report)


def run_mwis_ratio(config: CliConfig) -> None:
    report = measure_mwis_ratio(
        build_graph_spec(config), config.trials,
        distribution=_weight_distribution(config), seed=config.seed, threads=config.threads,
    )
    _write_report(config, report)


def run_moment_check(config: CliConfig) -> None:
    nx_graph = build_graph_spec(config).build()
    topology = WeightedGraph.from_networkx(nx_graph, [1.0] * nx_graph.number_of_nodes())
    if config.model == 'mwis_mixture':
        report = measure_mixture_moment_identity(
            topology, config.node, config.rho, config.components, config.component, config.trials,
            seed=config.seed, threads=config.threads,
        )
    else:
        report = measure_moment_identity(topology, config.node, config.trials, seed=config.seed, threads=config.threads)
    _write_report(config, report)


def run_check_conditions(config: CliConfig) -> None:
    assert config.delta is not None
    report = check_conditions(build_model_kind(config), config.delta)
    _write_json(config, report.to_dict())


def run_mwis_misclass(config: CliConfig) -> None:
    report = measure_mwis_misclassification(
        build_graph_spec(config), config.epsilon, config.depths, config.trials,
        distribution=_weight_distribution(config), seed=config.seed, threads=config.threads,
    )
    _write_report(config, report)


def run_coupling(config: CliConfig) -> None:
    model = build_model_kind(config)
    report = measure_coupling(model, config.x, config.x_prime, config.trials, seed=config.seed)
    if config.lemma_samples is not None:
        lemmas = check_lemmas(model, config.lemma_samples, seed=config.seed)
        logger.info('Partial cavity inequalities: %s', lemmas.to_dict())
        report = ExperimentReport(
            experiment=report.experiment,
            config={**report.config, 'lemmas': lemmas.to_dict()},
            seed=report.seed,
            rows=report.rows,
            wall_time=report.wall_time,
        )
    _write_report(config, report)


COMMAND_HANDLERS: dict[str, Callable[[CliConfig], None]] = {
    'gen': run_gen,
    'solve-exact': run_solve_exact,
    'ce': run_ce,
    'mwis': run_mwis,
    'decay': run_decay,
    'misclass': run_misclass,
    'subopt': run_subopt,
    'mwis-ratio': run_mwis_ratio,
    'moment-check': run_moment_check,
    'check-conditions': run_check_conditions,
    'mwis-misclass': run_mwis_misclass,
    'coupling': run_coupling,
}
