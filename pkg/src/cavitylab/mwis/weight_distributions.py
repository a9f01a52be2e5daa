"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from cavitylab.exceptions import InvalidParamsError
from cavitylab.helpers import StreamKey, keyed_rng

__all__ = [
    'Exponential',
    'ExponentialMixture',
    'WeightDistribution',
    'sample_weights',
]


class WeightDistribution(ABC):
    """
    Base class for node weight distributions of the MWIS engine.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        raise NotImplementedError()

    @abstractmethod
    def sample(self, rng: np.random.Generator, size: int) -> npt.NDArray[np.float64]:
        """
        Draws `size` i.i.d. weights from the given generator.
        """
        raise NotImplementedError()

    @abstractmethod
    def tail(self, t: float) -> float:
        """
        Returns `P(W > t)`.
        """
        raise NotImplementedError()


@dataclass(frozen=True)
class Exponential(WeightDistribution):
    """
    Exponential weights with the given rate (default 1).
    """
    rate: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.rate) and self.rate > 0):
            raise InvalidParamsError(parameter='rate', reason='Rate must be a positive number.')

    @property
    def name(self) -> str:
        return 'exp'

    def sample(self, rng: np.random.Generator, size: int) -> npt.NDArray[np.float64]:
        return rng.exponential(1 / self.rate, size=size)

    def tail(self, t: float) -> float:
        return 1.0 if t < 0 else math.exp(-self.rate * t)


@dataclass(frozen=True)
class ExponentialMixture(WeightDistribution):
    """
    Uniform mixture of `delta` exponential distributions with rates `α_j = ρ^j`, j = 1, ..., Δ:

    ```
    P(W > t) = (1/Δ) Σ_j exp(-α_j t)
    ```

    Sampled hierarchically: first the component j uniformly, then an exponential with rate `ρ^j`.
    """
    rho: float
    delta: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.rho) and self.rho > 1):
            raise InvalidParamsError(parameter='rho', reason='Rho must be a finite number > 1.')
        if type(self.delta) is not int or self.delta < 1:
            raise InvalidParamsError(parameter='delta', reason='Delta must be an integer >= 1.')

    @property
    def name(self) -> str:
        return 'mixture'

    @property
    def rates(self) -> npt.NDArray[np.float64]:
        return self.rho ** np.arange(1, self.delta + 1, dtype=np.float64)

    def sample(self, rng: np.random.Generator, size: int) -> npt.NDArray[np.float64]:
        components = rng.integers(0, self.delta, size=size)
        return rng.exponential(1.0, size=size) / self.rates[components]

    def tail(self, t: float) -> float:
        if t < 0:
            return 1.0
        return float(np.mean(np.exp(-self.rates * t)))


def sample_weights(num_nodes: int, distribution: WeightDistribution, seed: int) -> npt.NDArray[np.float64]:
    """
    Draws `num_nodes` i.i.d. weights from the stream `(seed, WEIGHTS)`. The same seed always gives the same vector.
    """
    if type(num_nodes) is not int or num_nodes < 0:
        raise InvalidParamsError(parameter='num_nodes', reason='Number of nodes must be a non-negative integer.')
    return distribution.sample(keyed_rng(seed, StreamKey.WEIGHTS), num_nodes)
