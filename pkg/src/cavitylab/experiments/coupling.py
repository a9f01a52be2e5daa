"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import time
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from cavitylab.exceptions import InvalidParamsError
from cavitylab.helpers import MeanEstimate, StreamKey, keyed_rng
from cavitylab.models import (
    GaussianCorrelatedModel,
    GaussianModel,
    ModelKind,
    ModelSpec,
    UniformModel,
    coupling_params,
    covariance_factor,
)
from .reports import ExperimentReport, ReportRow
from .trials import build_report, check_trials

__all__ = [
    'EdgeSample',
    'LemmaReport',
    'check_lemmas',
    'measure_coupling',
    'sample_edges',
]

# Slack of the exact inequalities for floating point rounding, relative to the magnitude of the operands
ROUNDING_SLACK = 1e-12


@dataclass(frozen=True)
class EdgeSample:
    """
    Vectorized sample of binary edges as seen from the receiving node u: the edge terms `Φ¹, Φ², Φ³` and the potential
    gap `δ = Φ_v(1) - Φ_v(0)` of the sending node v.
    """
    phi1: npt.NDArray[np.float64]
    phi2: npt.NDArray[np.float64]
    phi3: npt.NDArray[np.float64]
    gap: npt.NDArray[np.float64]

    @property
    def y(self) -> npt.NDArray[np.float64]:
        return self.phi2 - self.phi1

    def mu(self, z: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
        return self.phi3 + (np.maximum(self.phi1, z) - np.maximum(self.phi2, z))

    def coupled(self, z: npt.NDArray[np.float64], z_prime: npt.NDArray[np.float64]) -> npt.NDArray[np.bool_]:
        upper = np.maximum(self.phi1, self.phi2)
        lower = np.minimum(self.phi1, self.phi2)
        return (np.minimum(z, z_prime) >= upper) | (np.maximum(z, z_prime) <= lower)


def sample_edges(model: ModelKind, size: int, seed: int) -> EdgeSample:
    """
    Draws `size` independent edges of a binary model (table entries ordered `(00, 01, 10, 11)`, row = receiving node)
    together with the potential gap of the sending node, all from the stream `(seed, TRIAL)`.
    """
    rng = keyed_rng(seed, StreamKey.TRIAL)
    if isinstance(model, UniformModel):
        tables = rng.uniform(-model.i2, model.i2, size=(size, 4))
        gap = rng.uniform(-model.i1, model.i1, size=size)
    elif isinstance(model, GaussianModel):
        tables = rng.normal(0.0, model.sigma_e, size=(size, 4))
        gap = -rng.normal(0.0, model.sigma_p, size=size)
    elif isinstance(model, GaussianCorrelatedModel):
        factor = covariance_factor(model.covariance_array)
        tables = model.mean_array[None, :] + rng.standard_normal((size, 4)) @ factor.T
        gap = -rng.normal(model.mean_p, model.sigma_p, size=size)
    else:
        raise InvalidParamsError(parameter='kind', reason=f'Edge sampling is not supported for model {model.name}.')
    return EdgeSample(
        phi1=tables[:, 2] - tables[:, 3],
        phi2=tables[:, 0] - tables[:, 1],
        phi3=tables[:, 3] - tables[:, 1],
        gap=gap,
    )


def _model_of(spec: ModelSpec | ModelKind) -> ModelKind:
    return spec.kind if isinstance(spec, ModelSpec) else spec


def measure_coupling(
    spec: ModelSpec | ModelKind,
    x: float,
    x_prime: float,
    trials: int,
    *,
    seed: int = 0,
) -> ExperimentReport:
    """
    Estimates the non-coupling probability `P(μ(x + δ) != μ(x′ + δ))` of a random edge, where δ is the potential gap
    of the sending node, and reports it next to the closed-form bound `a + b|x - x′|`.
    """
    started = time.perf_counter()
    check_trials(trials)
    model = _model_of(spec)
    params = coupling_params(model)

    edges = sample_edges(model, trials, seed)
    first = edges.mu(x + edges.gap)
    second = edges.mu(x_prime + edges.gap)
    estimate = MeanEstimate.from_samples((first != second).astype(np.float64))
    bound = params.non_coupling_bound(x, x_prime)

    row = ReportRow(
        experiment='coupling',
        model=model.name,
        graph='edge',
        n=2,
        delta=1,
        r=None,
        trials=estimate.count,
        estimate=estimate.mean,
        stderr=estimate.stderr,
        excluded=0,
        seed=seed,
        extra={'x': x, 'x_prime': x_prime, 'bound': bound, **params.to_dict()},
    )
    config = {'model': model.to_dict(), 'x': x, 'x_prime': x_prime, 'trials': trials}
    return build_report('coupling', config, seed, [row], started)


@dataclass(frozen=True)
class LemmaReport:
    """
    Violation counts of the exact inequalities of the partial cavity of binary edges:

    - `lipschitz`: `|μ(z) - μ(z′)| <= |z - z′|`
    - `y_bound`: `|μ(z) - μ(z′)| <= |Y|`, and `|Y| <= K_Y` if the model has an almost sure bound
    - `coupling_event`: the coupling event implies `μ(z) == μ(z′)` exactly
    """
    samples: int
    lipschitz: int
    y_bound: int
    coupling_event: int

    @property
    def ok(self) -> bool:
        return self.lipschitz == 0 and self.y_bound == 0 and self.coupling_event == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            'samples': self.samples,
            'lipschitz': self.lipschitz,
            'y_bound': self.y_bound,
            'coupling_event': self.coupling_event,
            'ok': self.ok,
        }


def check_lemmas(spec: ModelSpec | ModelKind, samples: int, *, seed: int = 0, spread: float = 2.0) -> LemmaReport:
    """
    Samples edges of the model and pairs of cavity values `z, z′ ~ U[-spread, spread]` (shifted by the potential gap)
    and counts violations of the exact partial cavity inequalities.
    """
    check_trials(samples)
    model = _model_of(spec)
    params = coupling_params(model)

    edges = sample_edges(model, samples, seed)
    rng = keyed_rng(seed, StreamKey.BOUNDARY)
    z = rng.uniform(-spread, spread, size=samples) + edges.gap
    z_prime = rng.uniform(-spread, spread, size=samples) + edges.gap

    first, second = edges.mu(z), edges.mu(z_prime)
    change = np.abs(first - second)
    magnitude = np.maximum.reduce([
        np.ones(samples), np.abs(z), np.abs(z_prime), np.abs(edges.phi1), np.abs(edges.phi2),
    ])
    slack = ROUNDING_SLACK * magnitude

    y = np.abs(edges.y)
    y_violations = change > y + slack
    if params.k_y is not None:
        y_violations |= y > params.k_y * (1 + ROUNDING_SLACK)

    return LemmaReport(
        samples=samples,
        lipschitz=int(np.count_nonzero(change > np.abs(z - z_prime) + slack)),
        y_bound=int(np.count_nonzero(y_violations)),
        coupling_event=int(np.count_nonzero(edges.coupled(z, z_prime) & (first != second))),
    )
