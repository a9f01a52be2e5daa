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

from cavitylab.exceptions import InvalidParamsError

__all__ = [
    'MixtureCheck',
    'mixture_matrix',
    'mixture_matrix_check',
]

RELATIVE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class MixtureCheck:
    theta: float
    holds: bool
    # Largest ratio (M'x)_j / x_j over all components
    max_ratio: float

    def to_dict(self) -> dict[str, Any]:
        return {'theta': self.theta, 'holds': self.holds, 'max_ratio': self.max_ratio}


def _validate(rho: float, delta: int) -> None:
    if not (math.isfinite(rho) and rho > 1):
        raise InvalidParamsError(parameter='rho', reason='Rho must be a finite number > 1.')
    if type(delta) is not int or delta < 1:
        raise InvalidParamsError(parameter='delta', reason='Delta must be an integer >= 1.')


def mixture_matrix(rho: float, delta: int) -> npt.NDArray[np.float64]:
    """
    Returns the Δ×Δ matrix `M` with `M[j,j] = 1/2`, `M[j,k] = 1` for `j > k` and `M[j,k] = (1/ρ)^(k-j)` for `k > j`.
    """
    _validate(rho, delta)
    index = np.arange(delta)
    offset = index[None, :] - index[:, None]
    matrix = np.where(offset < 0, 1.0, rho ** -np.maximum(offset, 0).astype(np.float64))
    np.fill_diagonal(matrix, 0.5)
    return matrix


def mixture_matrix_check(rho: float, delta: int) -> MixtureCheck:
    """
    Checks the contraction of the mixture moment recursion: with `ε = 1/ρ`, the test vector `x_k = ε^(k/2)` and
    `θ = 1/2 + 2√ε / (1 - √ε)`, verifies `(Mᵀx)_j <= θ x_j` for every component. `holds` is True iff θ < 1 and the
    componentwise check passes.
    """
    _validate(rho, delta)
    root_epsilon = math.sqrt(1 / rho)
    theta = 0.5 + 2 * root_epsilon / (1 - root_epsilon)

    test_vector = root_epsilon ** np.arange(1, delta + 1, dtype=np.float64)
    image = mixture_matrix(rho, delta).T @ test_vector
    componentwise = bool(np.all(image <= theta * test_vector * (1 + RELATIVE_TOLERANCE)))
    return MixtureCheck(
        theta=theta,
        holds=theta < 1 and componentwise,
        max_ratio=float(np.max(image / test_vector)),
    )
