"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import logging
import math

import networkx as nx
import numpy as np
import numpy.typing as npt

from cavitylab.exceptions import InvalidParamsError
from cavitylab.helpers import StreamKey, keyed_rng
from cavitylab.mwis import sample_weights
from cavitylab.network import DecisionNetwork, WeightedGraph
from .encoders import encode_mwis
from .model_spec import (
    GaussianCorrelatedModel,
    GaussianModel,
    MapEstimationModel,
    ModelSpec,
    MwisExpModel,
    MwisMixtureModel,
    UniformModel,
)

__all__ = [
    'covariance_factor',
    'generate',
    'generate_network',
    'sample_latent_causes',
]

logger = logging.getLogger(__name__)

# Eigenvalues below this value are clipped when the Cholesky factorization of a covariance fails
EIGENVALUE_FLOOR = 1e-12


def covariance_factor(covariance: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    """
    Returns a matrix L with `L Lᵀ ≈ covariance`: the Cholesky factor if it exists, otherwise the factor of the
    covariance with eigenvalues clipped to `EIGENVALUE_FLOOR` (singular or slightly indefinite input).
    """
    try:
        return np.linalg.cholesky(covariance)
    except np.linalg.LinAlgError:
        logger.debug('Cholesky factorization failed, repairing covariance by eigenvalue clipping.')
        eigenvalues, eigenvectors = np.linalg.eigh(covariance)
        return eigenvectors * np.sqrt(np.clip(eigenvalues, EIGENVALUE_FLOOR, None))[None, :]


def _sorted_edges(graph: nx.Graph) -> list[tuple[int, int]]:
    return sorted((min(u, v), max(u, v)) for u, v in graph.edges())


def _node_rng(seed: int, node: int) -> np.random.Generator:
    return keyed_rng(seed, StreamKey.NODE_POTENTIAL, node)


def _edge_rng(seed: int, u: int, v: int) -> np.random.Generator:
    return keyed_rng(seed, StreamKey.EDGE_TABLE, u, v)


def _generate_uniform(model: UniformModel, graph: nx.Graph, seed: int) -> DecisionNetwork:
    return DecisionNetwork(
        num_actions=2,
        node_potentials=[
            [0.0, _node_rng(seed, node).uniform(-model.i1, model.i1)] for node in range(graph.number_of_nodes())
        ],
        edges=[
            (u, v, _edge_rng(seed, u, v).uniform(-model.i2, model.i2, size=4).reshape(2, 2))
            for u, v in _sorted_edges(graph)
        ],
    )


def _generate_gaussian(model: GaussianModel, graph: nx.Graph, seed: int) -> DecisionNetwork:
    return DecisionNetwork(
        num_actions=2,
        node_potentials=[
            [_node_rng(seed, node).normal(0.0, model.sigma_p), 0.0] for node in range(graph.number_of_nodes())
        ],
        edges=[
            (u, v, _edge_rng(seed, u, v).normal(0.0, model.sigma_e, size=4).reshape(2, 2))
            for u, v in _sorted_edges(graph)
        ],
    )


def _generate_gaussian_correlated(model: GaussianCorrelatedModel, graph: nx.Graph, seed: int) -> DecisionNetwork:
    mean = model.mean_array
    factor = covariance_factor(model.covariance_array)
    return DecisionNetwork(
        num_actions=2,
        node_potentials=[
            [_node_rng(seed, node).normal(model.mean_p, model.sigma_p), 0.0] for node in range(graph.number_of_nodes())
        ],
        edges=[
            (u, v, (mean + factor @ _edge_rng(seed, u, v).standard_normal(4)).reshape(2, 2))
            for u, v in _sorted_edges(graph)
        ],
    )


def sample_latent_causes(num_nodes: int, p: float, seed: int) -> tuple[int, ...]:
    """
    Hidden Bernoulli(p) causes of the MAP estimation preset, one stream `(seed, LATENT, v)` per node.
    """
    return tuple(int(keyed_rng(seed, StreamKey.LATENT, node).random() < p) for node in range(num_nodes))


def _generate_map_estimation(model: MapEstimationModel, graph: nx.Graph, seed: int) -> DecisionNetwork:
    num_nodes = graph.number_of_nodes()
    causes = sample_latent_causes(num_nodes, model.p, seed)
    prior = math.log(model.p / (1 - model.p))
    normalization = -math.log(model.sigma_o * math.sqrt(2 * math.pi))

    edges = []
    for u, v in _sorted_edges(graph):
        observation = causes[u] + causes[v] + _edge_rng(seed, u, v).normal(0.0, model.sigma_o)
        table = [
            [normalization - (observation - x - y) ** 2 / (2 * model.sigma_o ** 2) for y in range(2)]
            for x in range(2)
        ]
        edges.append((u, v, table))

    return DecisionNetwork(num_actions=2, node_potentials=[[0.0, prior]] * num_nodes, edges=edges)


def generate(spec: ModelSpec) -> DecisionNetwork | WeightedGraph:
    """
    Generates a random instance. Every node potential and edge table is drawn from its own keyed stream
    `(seed, NODE_POTENTIAL, v)` or `(seed, EDGE_TABLE, u, v)`, MWIS weights from `(seed, WEIGHTS)`. The same spec
    always generates the same instance.

    Returns a `WeightedGraph` for the MWIS models and a `DecisionNetwork` otherwise.
    """
    graph = spec.graph.build()
    kind = spec.kind
    logger.debug(
        'Generating %s instance on %s graph with %d nodes.', kind.name, spec.graph.kind, graph.number_of_nodes(),
    )

    if isinstance(kind, UniformModel):
        return _generate_uniform(kind, graph, spec.seed)
    if isinstance(kind, GaussianModel):
        return _generate_gaussian(kind, graph, spec.seed)
    if isinstance(kind, GaussianCorrelatedModel):
        return _generate_gaussian_correlated(kind, graph, spec.seed)
    if isinstance(kind, MapEstimationModel):
        return _generate_map_estimation(kind, graph, spec.seed)
    if isinstance(kind, (MwisExpModel, MwisMixtureModel)):
        weights = sample_weights(graph.number_of_nodes(), kind.weight_distribution, spec.seed)
        return WeightedGraph(weights=weights, edges=_sorted_edges(graph))
    raise InvalidParamsError(parameter='kind', reason=f'Unsupported model {kind.name}.')


def generate_network(spec: ModelSpec) -> DecisionNetwork:
    """
    Like `generate()`, but MWIS instances are returned in their decision network encoding.
    """
    instance = generate(spec)
    if isinstance(instance, WeightedGraph):
        return encode_mwis(instance)
    return instance
