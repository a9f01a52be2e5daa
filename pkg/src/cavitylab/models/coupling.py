"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from cavitylab.exceptions import InvalidParamsError, UnsupportedCorrelationError
from .model_spec import GaussianCorrelatedModel, GaussianModel, ModelKind, ModelSpec, UniformModel

__all__ = [
    'CouplingParams',
    'GaussianMoments',
    'coupling_params',
    'gaussian_moments',
    'k_phi',
]


@dataclass(frozen=True)
class CouplingParams:
    """
    Parameters of an (a, b)-coupling of the partial cavity function: for cavity values x, x′ the partial cavities of
    a random edge coincide with probability at least `(1 - a) - b|x - x′|`.

    `k_y` is an almost sure bound on the interaction coupling `|Y_e|` (None if unbounded) and `k_phi` a bound on the
    L² norm of the edge table.
    """
    a: float
    b: float
    k_y: float | None
    k_phi: float

    def non_coupling_bound(self, x: float, x_prime: float) -> float:
        return self.a + self.b * abs(x - x_prime)

    def to_dict(self) -> dict[str, Any]:
        return {'a': self.a, 'b': self.b, 'k_y': self.k_y, 'k_phi': self.k_phi}


@dataclass(frozen=True)
class GaussianMoments:
    """
    Second moments of the derived edge quantities of a Gaussian model, with the node potential noise folded in.
    """
    sigma_1: float
    sigma_2: float
    rho: float
    c: float
    sigma_x: float
    sigma_y: float
    mean_shift: float


def _edge_moments(model: GaussianModel | GaussianCorrelatedModel) -> tuple[npt.NDArray[np.float64], ...]:
    if isinstance(model, GaussianModel):
        return np.zeros(4), np.eye(4) * model.sigma_e ** 2
    return model.mean_array, model.covariance_array


def gaussian_moments(model: GaussianModel | GaussianCorrelatedModel) -> GaussianMoments:
    """
    Computes `σ_1, σ_2, ρ, C, σ_X, σ_Y` for a Gaussian edge with entries ordered `(00, 01, 10, 11)`.

    Raises `UnsupportedCorrelationError` if `C >= 1` or C is undefined.
    """
    mean, s = _edge_moments(model)
    sigma_p_squared = model.sigma_p ** 2

    variance_1 = s[2, 2] - 2 * s[2, 3] + s[3, 3] + sigma_p_squared
    variance_2 = s[0, 0] - 2 * s[0, 1] + s[1, 1] + sigma_p_squared
    sigma_1, sigma_2 = math.sqrt(max(variance_1, 0.0)), math.sqrt(max(variance_2, 0.0))
    if sigma_1 == 0 or sigma_2 == 0:
        raise UnsupportedCorrelationError(correlation=math.nan, reason='Degenerate edge distribution.')
    rho = (s[0, 2] - s[0, 3] - s[1, 2] + s[1, 3] + sigma_p_squared) / (sigma_1 * sigma_2)

    denominator_squared = (variance_1 + variance_2) ** 2 - 4 * rho ** 2 * variance_1 * variance_2
    if denominator_squared <= 0:
        raise UnsupportedCorrelationError(correlation=float(rho), reason='Correlation coefficient C is undefined.')
    c = (variance_2 - variance_1) / math.sqrt(denominator_squared)
    if abs(c) >= 1:
        raise UnsupportedCorrelationError(correlation=float(c), reason='Coupling needs C < 1.')

    return GaussianMoments(
        sigma_1=sigma_1,
        sigma_2=sigma_2,
        rho=float(rho),
        c=float(c),
        sigma_x=math.sqrt(max(variance_1 + variance_2 + 2 * rho * sigma_1 * sigma_2, 0.0)),
        sigma_y=math.sqrt(max(variance_1 + variance_2 - 2 * rho * sigma_1 * sigma_2, 0.0)),
        mean_shift=float(abs(mean[0] + mean[3] - mean[2] - mean[1])),
    )


def k_phi(model: ModelKind) -> float:
    """
    Bound on `(Σ_{x,y} E|Φ_e(x,y)|²)^{1/2}`, computed exactly for the supported models.
    """
    if isinstance(model, UniformModel):
        return 2 * model.i2 / math.sqrt(3)
    if isinstance(model, GaussianModel):
        return 2 * model.sigma_e
    if isinstance(model, GaussianCorrelatedModel):
        return math.sqrt(float(np.trace(model.covariance_array)) + float(model.mean_array @ model.mean_array))
    raise InvalidParamsError(parameter='kind', reason=f'No coupling parameters for model {model.name}.')


def coupling_params(spec: ModelSpec | ModelKind) -> CouplingParams:
    """
    Closed-form coupling parameters.

    Uniform: `a = I2/(2 I1)`, `b = 1/(2 I1)`, `K_Y = 4 I2`. Gaussian (also correlated):

    ```
    a = (1/π) arctan(σ_Y / (σ_X √(1 - C²))) + √(2/π) |μ00 + μ11 - μ10 - μ01| / σ_X
    b = √(2/π) / σ_X
    ```

    with `K_Y` absent. `a` is capped at 1.
    """
    model = spec.kind if isinstance(spec, ModelSpec) else spec
    if isinstance(model, UniformModel):
        return CouplingParams(
            a=min(1.0, model.i2 / (2 * model.i1)),
            b=1 / (2 * model.i1),
            k_y=4 * model.i2,
            k_phi=k_phi(model),
        )
    if isinstance(model, (GaussianModel, GaussianCorrelatedModel)):
        moments = gaussian_moments(model)
        a = (
            math.atan(math.sqrt(1 / (1 - moments.c ** 2)) * moments.sigma_y / moments.sigma_x) / math.pi
            + math.sqrt(2 / math.pi) * moments.mean_shift / moments.sigma_x
        )
        return CouplingParams(
            a=min(1.0, a),
            b=math.sqrt(2 / math.pi) / moments.sigma_x,
            k_y=None,
            k_phi=k_phi(model),
        )
    raise InvalidParamsError(parameter='kind', reason=f'No coupling parameters for model {model.name}.')
