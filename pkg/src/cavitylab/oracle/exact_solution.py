"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from dataclasses import dataclass
from typing import Any

from cavitylab.network import Assignment, ExtReal, format_ext_real

__all__ = [
    'ExactSolution',
]


@dataclass(frozen=True)
class ExactSolution:
    """
    Result of an exact solver: the optimal value `J = max_x F(x)`, an optimal assignment and whether the optimum is
    attained by this assignment only.

    `unique` is None if the solver was asked not to check uniqueness.
    """
    optimum: ExtReal
    argmax: Assignment
    unique: bool | None

    def to_dict(self) -> dict[str, Any]:
        return {
            'optimum': format_ext_real(self.optimum),
            'argmax': list(self.argmax),
            'unique': self.unique,
        }
