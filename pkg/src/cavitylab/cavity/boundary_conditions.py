"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math
from abc import ABC, abstractmethod

from cavitylab.exceptions import InfeasibleReferenceError, InvalidOptionException
from cavitylab.helpers import StreamKey, keyed_uniform
from cavitylab.network import NEG_INF, ExtReal, SubnetworkView

__all__ = [
    'BoundaryCondition',
    'ConstantBoundary',
    'PotentialGapBoundary',
    'SeededUniformBoundary',
    'ZeroBoundary',
]


class BoundaryCondition(ABC):
    """
    Base class for boundary conditions of the cavity expansion: the values returned by `ce()` at depth 0.

    The value for action 0 is always 0, since every cavity vector satisfies `B(0) = 0`. Values must be deterministic
    given the view, the node and the action.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """
        Short description used in reports, e.g. `zero` or `constant(1.5)`.
        """
        raise NotImplementedError()

    @abstractmethod
    def value(self, view: SubnetworkView, node: int, action: int) -> ExtReal:
        """
        Returns the boundary value for a node and an action other than 0.
        """
        raise NotImplementedError()

    def __call__(self, view: SubnetworkView, node: int, action: int, reference: int = 0) -> ExtReal:
        """
        Returns the boundary value of `action` relative to the value of `reference`.
        """
        if action == reference:
            return 0.0
        return self._value_or_zero(view, node, action) - self._value_or_zero(view, node, reference)

    def _value_or_zero(self, view: SubnetworkView, node: int, action: int) -> ExtReal:
        return 0.0 if action == 0 else self.value(view, node, action)

    def __repr__(self) -> str:
        return f'{type(self).__name__}({self.name!r})'


class ZeroBoundary(BoundaryCondition):
    """
    Boundary condition that returns 0 everywhere (the default).
    """

    @property
    def name(self) -> str:
        return 'zero'

    def value(self, view: SubnetworkView, node: int, action: int) -> ExtReal:
        return 0.0


class PotentialGapBoundary(BoundaryCondition):
    """
    Boundary condition that returns the potential gap `Φ_v(x) - Φ_v(0)` under the effective potential of the view,
    i.e. the cavity of the node if all of its remaining edges were ignored.
    """

    @property
    def name(self) -> str:
        return 'potential_gap'

    def __call__(self, view: SubnetworkView, node: int, action: int, reference: int = 0) -> ExtReal:
        if action == reference:
            return 0.0
        potential = view.effective_potential(node)
        if potential[reference] == NEG_INF:
            raise InfeasibleReferenceError(node=node, reason=f'Effective potential of action {reference} is NEG_INF.')
        return potential[action] - potential[reference]

    def value(self, view: SubnetworkView, node: int, action: int) -> ExtReal:
        return self(view, node, action)


class ConstantBoundary(BoundaryCondition):
    """
    Boundary condition that returns the same finite constant for every node and every action other than 0.
    """

    constant: float

    def __init__(self, constant: float):
        if not math.isfinite(constant):
            raise InvalidOptionException('Parameter "constant" must be finite.')
        self.constant = float(constant)

    @property
    def name(self) -> str:
        return f'constant({self.constant!r})'

    def value(self, view: SubnetworkView, node: int, action: int) -> ExtReal:
        return self.constant


class SeededUniformBoundary(BoundaryCondition):
    """
    Boundary condition with a pseudo-random uniform value from `[low, high)` per (node, action).

    Values are drawn from a keyed random stream `(seed, node, action)`, so they only depend on these three numbers and
    not on the order of evaluation. In particular, the same node gets the same boundary value in every subnetwork.
    """

    low: float
    high: float
    seed: int

    def __init__(self, low: float, high: float, seed: int):
        if not (math.isfinite(low) and math.isfinite(high)) or low > high:
            raise InvalidOptionException('Parameters "low" and "high" must be finite with low <= high.')
        self.low = float(low)
        self.high = float(high)
        self.seed = seed

    @property
    def name(self) -> str:
        return f'seeded_uniform({self.low!r}, {self.high!r}, seed={self.seed})'

    def value(self, view: SubnetworkView, node: int, action: int) -> ExtReal:
        return keyed_uniform(self.seed, StreamKey.BOUNDARY, node, action, low=self.low, high=self.high)
