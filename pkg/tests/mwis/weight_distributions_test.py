"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math

import numpy as np
import pytest

from cavitylab.exceptions import InvalidParamsError
from cavitylab.mwis import Exponential, ExponentialMixture, sample_weights


class WeightDistributionsTest:
    """
    Tests for the exponential and exponential mixture weight distributions.
    """

    @staticmethod
    def test_exponential_mean():
        """ Tests the sample mean of unit rate exponential weights. """
        weights = sample_weights(10 ** 6, Exponential(), 0)
        assert weights.shape == (10 ** 6,)
        assert np.mean(weights) == pytest.approx(1.0, abs=0.01)

    @staticmethod
    def test_exponential_tail():
        assert Exponential(2.0).tail(0.5) == pytest.approx(math.exp(-1))
        assert Exponential().tail(-1.0) == 1.0
        assert Exponential().name == 'exp'

    @staticmethod
    def test_mixture_rates_and_tail():
        """ Tests the component rates and the closed form tail of the mixture. """
        mixture = ExponentialMixture(rho=26, delta=3)
        assert mixture.name == 'mixture'
        assert mixture.rates.tolist() == [26.0, 676.0, 17576.0]
        assert mixture.tail(0.01) == pytest.approx((math.exp(-0.26) + math.exp(-6.76) + math.exp(-175.76)) / 3)

    @staticmethod
    @pytest.mark.parametrize('t', [0.02, 0.05, 0.2])
    def test_mixture_empirical_tail(t):
        """ Tests that the empirical tail of sampled weights matches the closed form. """
        mixture = ExponentialMixture(rho=26, delta=2)
        size = 10 ** 5
        weights = sample_weights(size, mixture, 4)
        expected = mixture.tail(t)
        standard_error = math.sqrt(expected * (1 - expected) / size)
        assert abs(np.mean(weights > t) - expected) <= 4 * standard_error

    @staticmethod
    def test_reproducible():
        """ Tests that the same seed gives the same weight vector. """
        mixture = ExponentialMixture(rho=4.0, delta=3)
        assert np.array_equal(sample_weights(50, mixture, 9), sample_weights(50, mixture, 9))
        assert not np.array_equal(sample_weights(50, mixture, 9), sample_weights(50, mixture, 10))

    @staticmethod
    @pytest.mark.parametrize(
        'factory, parameter',
        [
            (lambda: Exponential(0.0), 'rate'),
            (lambda: Exponential(math.inf), 'rate'),
            (lambda: ExponentialMixture(rho=1.0, delta=2), 'rho'),
            (lambda: ExponentialMixture(rho=26, delta=0), 'delta'),
            (lambda: sample_weights(-1, Exponential(), 0), 'num_nodes'),
        ],
    )
    def test_invalid_params(factory, parameter):
        with pytest.raises(InvalidParamsError) as exception_info:
            factory()
        assert exception_info.value.to_dict()['parameter'] == parameter
