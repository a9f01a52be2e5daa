"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math

import numpy as np
import pytest

from cavitylab.models import (
    CycleGraph,
    GaussianCorrelatedModel,
    GaussianModel,
    GridGraph,
    MapEstimationModel,
    ModelSpec,
    MwisExpModel,
    MwisMixtureModel,
    PathGraph,
    UniformModel,
    covariance_factor,
    encode_mwis,
    generate,
    generate_network,
    sample_latent_causes,
)
from cavitylab.mwis import Exponential, sample_weights
from cavitylab.network import DecisionNetwork, WeightedGraph

ZERO_COVARIANCE = tuple(tuple(0.0 for _ in range(4)) for _ in range(4))


class GeneratorsTest:
    """
    Tests for the random instance generators.
    """

    @staticmethod
    def test_deterministic():
        """ Tests that equal specs generate equal networks and other seeds other networks. """
        spec = ModelSpec(UniformModel(1, 0.2), GridGraph(rows=3, cols=3), seed=3)
        assert generate(spec) == generate(spec)
        assert generate(spec) != generate(spec.with_seed(4))

    @staticmethod
    def test_uniform():
        """ Tests the structure and ranges of uniform model instances. """
        network = generate(ModelSpec(UniformModel(1, 0.2), CycleGraph(n=6), seed=1))
        assert isinstance(network, DecisionNetwork)
        assert network.edge_keys == ((0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5))
        assert np.all(network.node_potentials[:, 0] == 0)
        assert np.all(np.abs(network.node_potentials[:, 1]) <= 1)
        for _, _, table in network.edges():
            assert np.all(np.abs(table) <= 0.2)

    @staticmethod
    def test_node_potentials_independent_of_graph():
        """ Tests that node potentials come from per-node streams and do not depend on the graph. """
        cycle = generate(ModelSpec(UniformModel(1, 0.2), CycleGraph(n=5), seed=2))
        path = generate(ModelSpec(UniformModel(1, 0.2), PathGraph(n=5), seed=2))
        assert np.array_equal(cycle.node_potentials, path.node_potentials)
        assert np.array_equal(cycle.edge_array(1, 2), path.edge_array(1, 2))

    @staticmethod
    def test_gaussian():
        network = generate(ModelSpec(GaussianModel(0.0, 1.0), PathGraph(n=4), seed=5))
        assert np.all(network.node_potentials[:, 1] == 0)
        assert np.any(network.node_potentials[:, 0] != 0)
        for _, _, table in network.edges():
            assert np.all(table == 0)

    @staticmethod
    def test_gaussian_correlated_mean():
        """ Tests that a correlated model with zero covariance reproduces its mean table. """
        model = GaussianCorrelatedModel(mean=(1, 2, 3, 4), covariance=ZERO_COVARIANCE)
        network = generate(ModelSpec(model, PathGraph(n=3), seed=0))
        for _, _, table in network.edges():
            assert table == pytest.approx(np.array([[1, 2], [3, 4]]), abs=1e-4)
        assert np.all(network.node_potentials == 0)

    @staticmethod
    def test_covariance_factor():
        """ Tests the Cholesky factor and its repair for singular covariances. """
        positive = np.array([[2.0, 0.5], [0.5, 1.0]])
        factor = covariance_factor(positive)
        assert np.allclose(factor @ factor.T, positive)

        singular = np.array([[1.0, 1.0], [1.0, 1.0]])
        factor = covariance_factor(singular)
        assert np.allclose(factor @ factor.T, singular, atol=1e-5)

    @staticmethod
    def test_map_estimation():
        """ Tests the prior potentials and the edge likelihood tables of the MAP estimation preset. """
        model = MapEstimationModel(0.3, 0.5)
        network = generate(ModelSpec(model, PathGraph(n=4), seed=6))
        assert np.allclose(network.node_potentials, [[0.0, math.log(0.3 / 0.7)]] * 4)
        normalization = -math.log(0.5 * math.sqrt(2 * math.pi))
        for _, _, table in network.edges():
            assert np.all(table <= normalization)

    @staticmethod
    def test_latent_causes():
        """ Tests that hidden causes are reproducible Bernoulli draws. """
        causes = sample_latent_causes(2000, 0.3, 1)
        assert causes == sample_latent_causes(2000, 0.3, 1)
        assert set(causes) <= {0, 1}
        assert abs(sum(causes) / 2000 - 0.3) < 0.05

    @staticmethod
    def test_mwis():
        """ Tests that MWIS models generate weighted graphs with weights from the seeded stream. """
        graph = generate(ModelSpec(MwisExpModel(), PathGraph(n=6), seed=1))
        assert isinstance(graph, WeightedGraph)
        assert graph.edges == ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5))
        assert list(graph.weights) == pytest.approx(list(sample_weights(6, Exponential(), 1)))
        assert generate_network(ModelSpec(MwisExpModel(), PathGraph(n=6), seed=1)) == encode_mwis(graph)

    @staticmethod
    def test_mwis_mixture():
        graph = generate(ModelSpec(MwisMixtureModel(26.0, 3), CycleGraph(n=8), seed=2))
        assert isinstance(graph, WeightedGraph)
        assert all(weight >= 0 for weight in graph.weights)

    @staticmethod
    def test_generate_network_passthrough():
        spec = ModelSpec(UniformModel(1, 0.2), CycleGraph(n=4), seed=0)
        assert generate_network(spec) == generate(spec)
