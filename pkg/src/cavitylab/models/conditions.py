"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math
from dataclasses import dataclass
from typing import Any

from cavitylab.exceptions import InvalidParamsError
from cavitylab.mwis import mixture_matrix_check
from .coupling import CouplingParams, coupling_params
from .model_spec import GaussianCorrelatedModel, GaussianModel, ModelKind, ModelSpec, MwisMixtureModel, UniformModel

__all__ = [
    'ConditionReport',
    'check_conditions',
    'cond_first',
    'cond_third',
    'thm1_condition',
    'thm2_condition',
]


@dataclass(frozen=True)
class ConditionReport:
    """
    Sufficient conditions for the correlation decay of cavity expansion at maximum degree Δ. A flag is None if the
    condition does not apply to the model.

    Attributes:
        `thm1`: Uniform model, `β (Δ-1)² < 1` with `β = 5 I2 / (2 I1)`
        `thm2`: Gaussian model, `β (Δ-1) + √(β (Δ-1)³) < 1` with `β = √(σ_e² / (σ_e² + σ_p²))`
        `cond_first`: `a (Δ-1) + √(b K_Φ) (Δ-1)^{3/2} < 1`
        `cond_third`: `a (Δ-1) + b K_Y (Δ-1)² < 1`, only with an almost sure bound `K_Y`
        `mixture_ok`: MWIS mixture model, contraction check of the mixture moment recursion
    """
    delta: int
    thm1: bool | None = None
    thm2: bool | None = None
    cond_first: bool | None = None
    cond_third: bool | None = None
    mixture_ok: bool | None = None
    coupling: CouplingParams | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            'delta': self.delta,
            'thm1': self.thm1,
            'thm2': self.thm2,
            'cond_first': self.cond_first,
            'cond_third': self.cond_third,
            'mixture_ok': self.mixture_ok,
            'coupling': self.coupling.to_dict() if self.coupling is not None else None,
        }


def thm1_condition(model: UniformModel, delta: int) -> bool:
    beta = 5 * model.i2 / (2 * model.i1)
    return beta * (delta - 1) ** 2 < 1


def thm2_condition(model: GaussianModel, delta: int) -> bool:
    total = model.sigma_e ** 2 + model.sigma_p ** 2
    if total == 0:
        return False
    beta = math.sqrt(model.sigma_e ** 2 / total)
    return beta * (delta - 1) + math.sqrt(beta * (delta - 1) ** 3) < 1


def cond_first(params: CouplingParams, delta: int) -> bool:
    return params.a * (delta - 1) + math.sqrt(params.b * params.k_phi) * (delta - 1) ** 1.5 < 1


def cond_third(params: CouplingParams, delta: int) -> bool | None:
    if params.k_y is None:
        return None
    return params.a * (delta - 1) + params.b * params.k_y * (delta - 1) ** 2 < 1


def check_conditions(spec: ModelSpec | ModelKind, delta: int) -> ConditionReport:
    """
    Evaluates every sufficient condition that applies to the model at maximum degree `delta`.

    Raises `InvalidParamsError` if delta < 2.
    """
    if type(delta) is not int or delta < 2:
        raise InvalidParamsError(parameter='delta', reason='Delta must be an integer >= 2.')
    model = spec.kind if isinstance(spec, ModelSpec) else spec

    if isinstance(model, MwisMixtureModel):
        return ConditionReport(delta=delta, mixture_ok=mixture_matrix_check(model.rho, delta).holds)
    if not isinstance(model, (UniformModel, GaussianModel, GaussianCorrelatedModel)):
        return ConditionReport(delta=delta)

    params = coupling_params(model)
    return ConditionReport(
        delta=delta,
        thm1=thm1_condition(model, delta) if isinstance(model, UniformModel) else None,
        thm2=thm2_condition(model, delta) if isinstance(model, GaussianModel) else None,
        cond_first=cond_first(params, delta),
        cond_third=cond_third(params, delta),
        coupling=params,
    )
