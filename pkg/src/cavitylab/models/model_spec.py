"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import dataclasses
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from cavitylab.exceptions import InvalidParamsError
from cavitylab.mwis import Exponential, ExponentialMixture, WeightDistribution
from .graph_spec import GraphSpec

__all__ = [
    'GaussianCorrelatedModel',
    'GaussianModel',
    'MapEstimationModel',
    'ModelKind',
    'ModelSpec',
    'MwisExpModel',
    'MwisMixtureModel',
    'UniformModel',
]

# Smallest eigenvalue (relative to the largest) still accepted as numerically positive semidefinite
PSD_TOLERANCE = 1e-9


def _require_finite(name: str, value: float, *, minimum: float | None = None, strict: bool = False) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise InvalidParamsError(parameter=name, reason='Must be a finite number.')
    if minimum is not None and (value < minimum or (strict and value == minimum)):
        relation = '>' if strict else '>='
        raise InvalidParamsError(parameter=name, reason=f'Must be {relation} {minimum}.')


class ModelKind(ABC):
    """
    Base class of the random potential models. Decision-network models have `num_actions`, MWIS models sample node
    weights from a `weight_distribution` instead.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        raise NotImplementedError()

    @property
    def is_mwis(self) -> bool:
        return False

    def to_dict(self) -> dict[str, Any]:
        params = dataclasses.asdict(self)  # type: ignore[call-overload]
        return {'kind': self.name, **params}


@dataclass(frozen=True)
class UniformModel(ModelKind):
    """
    Binary model with `Φ_u(0) = 0`, `Φ_u(1) ~ U[-I1, I1]` and four i.i.d. `U[-I2, I2]` edge entries.
    """
    i1: float
    i2: float

    def __post_init__(self) -> None:
        _require_finite('i1', self.i1, minimum=0, strict=True)
        _require_finite('i2', self.i2, minimum=0)

    @property
    def name(self) -> str:
        return 'uniform'


@dataclass(frozen=True)
class GaussianModel(ModelKind):
    """
    Binary model with `Φ_v(1) = 0`, `Φ_v(0) ~ N(0, σ_p²)` and four i.i.d. `N(0, σ_e²)` edge entries.
    """
    sigma_e: float
    sigma_p: float

    def __post_init__(self) -> None:
        _require_finite('sigma_e', self.sigma_e, minimum=0)
        _require_finite('sigma_p', self.sigma_p, minimum=0)

    @property
    def name(self) -> str:
        return 'gaussian'


@dataclass(frozen=True)
class GaussianCorrelatedModel(ModelKind):
    """
    Binary model whose edge entries `(Φ_e(0,0), Φ_e(0,1), Φ_e(1,0), Φ_e(1,1))` are a Gaussian 4-vector with mean `mean`
    and covariance `covariance`, and with `Φ_v(1) = 0`, `Φ_v(0) ~ N(mean_p, σ_p²)`.

    The covariance must be a symmetric positive semidefinite 4×4 matrix. Tiny negative eigenvalues from rounding are
    accepted and clipped when sampling.
    """
    mean: tuple[float, float, float, float]
    covariance: tuple[tuple[float, float, float, float], ...]
    mean_p: float = 0.0
    sigma_p: float = 0.0

    def __post_init__(self) -> None:
        mean = np.asarray(self.mean, dtype=np.float64)
        if mean.shape != (4,) or not np.isfinite(mean).all():
            raise InvalidParamsError(parameter='mean', reason='Mean must be a finite 4-vector.')
        covariance = np.asarray(self.covariance, dtype=np.float64)
        if covariance.shape != (4, 4) or not np.isfinite(covariance).all():
            raise InvalidParamsError(parameter='covariance', reason='Covariance must be a finite 4x4 matrix.')
        if not np.allclose(covariance, covariance.T):
            raise InvalidParamsError(parameter='covariance', reason='Covariance must be symmetric.')
        eigenvalues = np.linalg.eigvalsh(covariance)
        if eigenvalues[0] < -PSD_TOLERANCE * max(1.0, float(eigenvalues[-1])):
            raise InvalidParamsError(parameter='covariance', reason='Covariance must be positive semidefinite.')
        _require_finite('mean_p', self.mean_p)
        _require_finite('sigma_p', self.sigma_p, minimum=0)

        object.__setattr__(self, 'mean', tuple(float(value) for value in mean))
        object.__setattr__(self, 'covariance', tuple(tuple(float(value) for value in row) for row in covariance))

    @property
    def name(self) -> str:
        return 'gaussian_correlated'

    @property
    def mean_array(self) -> npt.NDArray[np.float64]:
        return np.array(self.mean, dtype=np.float64)

    @property
    def covariance_array(self) -> npt.NDArray[np.float64]:
        return np.array(self.covariance, dtype=np.float64)


@dataclass(frozen=True)
class MapEstimationModel(ModelKind):
    """
    MAP estimation preset: every node carries a hidden binary cause `c_v ~ Bernoulli(p)`, every edge an observation
    `o_e ~ N(c_u + c_v, σ_o²)`. The network maximizes the posterior log-likelihood:

    ```
    Φ_v(c) = log(p / (1 - p)) * c
    Φ_e(x, y) = log N(o_e; x + y, σ_o²)
    ```
    """
    p: float
    sigma_o: float

    def __post_init__(self) -> None:
        _require_finite('p', self.p)
        if not 0 < self.p < 1:
            raise InvalidParamsError(parameter='p', reason='Must be in (0, 1).')
        _require_finite('sigma_o', self.sigma_o, minimum=0, strict=True)

    @property
    def name(self) -> str:
        return 'map_estimation'


@dataclass(frozen=True)
class MwisExpModel(ModelKind):
    """
    Maximum weight independent set with i.i.d. exponential(1) weights.
    """

    @property
    def name(self) -> str:
        return 'mwis_exp'

    @property
    def is_mwis(self) -> bool:
        return True

    @property
    def weight_distribution(self) -> WeightDistribution:
        return Exponential()


@dataclass(frozen=True)
class MwisMixtureModel(ModelKind):
    """
    Maximum weight independent set with i.i.d. weights from the mixture of exponentials with rates `ρ^j`,
    j = 1, ..., Δ.
    """
    rho: float
    delta: int

    def __post_init__(self) -> None:
        # Validated by the distribution
        ExponentialMixture(rho=self.rho, delta=self.delta)

    @property
    def name(self) -> str:
        return 'mwis_mixture'

    @property
    def is_mwis(self) -> bool:
        return True

    @property
    def weight_distribution(self) -> WeightDistribution:
        return ExponentialMixture(rho=self.rho, delta=self.delta)


@dataclass(frozen=True)
class ModelSpec:
    """
    A random instance family: potential model, graph family and seed. `generate(spec)` turns it into a concrete
    `DecisionNetwork` (or `WeightedGraph` for MWIS models). Equal specs always generate identical instances.
    """
    kind: ModelKind
    graph: GraphSpec
    seed: int = 0

    def __post_init__(self) -> None:
        if type(self.seed) is not int or self.seed < 0:
            raise InvalidParamsError(parameter='seed', reason='Seeds must be non-negative integers.')

    def with_seed(self, seed: int) -> 'ModelSpec':
        """
        Returns the same family with another potential seed. The graph (and its own seed) is kept.
        """
        return dataclasses.replace(self, seed=seed)

    def to_dict(self) -> dict[str, Any]:
        return {
            'model': self.kind.to_dict(),
            'graph': self.graph.to_dict(),
            'seed': self.seed,
        }
