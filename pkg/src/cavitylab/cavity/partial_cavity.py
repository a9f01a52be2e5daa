"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from collections.abc import Sequence

from cavitylab.exceptions import InfeasibleReferenceError, InvalidParamsError
from cavitylab.network import NEG_INF, CavityVector, ExtReal, OrientedTable

__all__ = [
    'BinaryEdgeTerms',
    'binary_edge_terms',
    'binary_mu',
    'mu',
    'mu_vector',
]


def _oriented(table: Sequence[Sequence[float]], transposed: bool) -> Sequence[Sequence[float]]:
    if not transposed:
        return table
    return tuple(zip(*table))


def mu(
    table: Sequence[Sequence[float]],
    action: int,
    cavity: Sequence[ExtReal],
    *,
    transposed: bool = False,
    reference: int = 0,
) -> ExtReal:
    """
    Partial cavity function of an edge {u, v} as seen from the receiving node u:

    ```
    μ(x, B) = max_y (Φ_{u,v}(x, y) + B(y)) - max_y (Φ_{u,v}(0, y) + B(y))
    ```

    where `B` is the cavity vector of the sending node v. The table must be oriented with row index = action of u, or
    `transposed=True` must be set if the row index is the action of v.

    μ does not change if a constant is added to every finite entry of `B`, so `B` may be given relative to any
    reference action of v. With `reference=a`, row `a` of the table replaces row 0 on the right-hand side.

    The result is `NEG_INF` if row `x` has no feasible entry while the reference row does. Raises
    `InfeasibleReferenceError` if the maximum over the reference row is `NEG_INF`, since the difference would be
    undefined.
    """
    rows = _oriented(table, transposed)
    reference_value = max(entry + value for entry, value in zip(rows[reference], cavity))
    if reference_value == NEG_INF:
        raise InfeasibleReferenceError(
            action=action,
            reason=f'Partial cavity is undefined: no feasible neighbor action for reference action {reference}.',
        )
    if action == reference:
        return 0.0
    return max(entry + value for entry, value in zip(rows[action], cavity)) - reference_value


def mu_vector(table: OrientedTable, cavity: Sequence[ExtReal]) -> CavityVector:
    """
    Returns `μ(x, B)` for all actions x of the receiving node (row index of `table`).
    """
    return tuple(mu(table, action, cavity) for action in range(len(table)))


class BinaryEdgeTerms:
    """
    Derived quantities of a binary (T = 2) edge table with finite entries, as seen from the receiving node u (row index
    = action of u):

    ```
    Φ¹ = Φ(1,0) - Φ(1,1)
    Φ² = Φ(0,0) - Φ(0,1)
    Φ³ = Φ(1,1) - Φ(0,1)
    X  = Φ¹ + Φ²
    Y  = Φ² - Φ¹ = Φ(1,1) - Φ(1,0) - Φ(0,1) + Φ(0,0)
    ```

    In terms of these, the partial cavity of a binary edge is `μ(z) = Φ³ + max(Φ¹, z) - max(Φ², z)` for the cavity
    vector `B = (0, z)` of the sending node. The interaction coupling `Y` is zero iff the edge decomposes into node
    potentials.
    """

    phi1: float
    phi2: float
    phi3: float

    def __init__(self, phi1: float, phi2: float, phi3: float):
        self.phi1 = phi1
        self.phi2 = phi2
        self.phi3 = phi3

    def __repr__(self) -> str:
        return f'BinaryEdgeTerms(phi1={self.phi1!r}, phi2={self.phi2!r}, phi3={self.phi3!r})'

    @property
    def x(self) -> float:
        return self.phi1 + self.phi2

    @property
    def y(self) -> float:
        return self.phi2 - self.phi1

    def mu(self, z: float) -> float:
        """
        Partial cavity `μ(z)`. Inside the coupling regions (z above both or below both thresholds) the value does not
        depend on z at all, also in floating point arithmetic.
        """
        return self.phi3 + (max(self.phi1, z) - max(self.phi2, z))

    def coupled(self, z: float, z_prime: float) -> bool:
        """
        Returns True if the coupling event holds for the two arguments: both at or above `max(Φ¹, Φ²)`, or both at or
        below `min(Φ¹, Φ²)`. In that case `μ(z) == μ(z_prime)` exactly.
        """
        upper = max(self.phi1, self.phi2)
        lower = min(self.phi1, self.phi2)
        return min(z, z_prime) >= upper or max(z, z_prime) <= lower


def binary_edge_terms(table: Sequence[Sequence[float]], *, transposed: bool = False) -> BinaryEdgeTerms:
    """
    Computes the `BinaryEdgeTerms` of a 2×2 table with finite entries (row index = action of the receiving node, or
    column index if `transposed=True`).
    """
    rows = _oriented(table, transposed)
    if len(rows) != 2 or any(len(row) != 2 for row in rows):
        raise InvalidParamsError(parameter='table', reason='Binary edge terms need a 2x2 table.')
    if any(entry == NEG_INF for row in rows for entry in row):
        raise InvalidParamsError(parameter='table', reason='Binary edge terms need finite table entries.')
    return BinaryEdgeTerms(
        phi1=rows[1][0] - rows[1][1],
        phi2=rows[0][0] - rows[0][1],
        phi3=rows[1][1] - rows[0][1],
    )


def binary_mu(table: Sequence[Sequence[float]], z: float, *, transposed: bool = False) -> float:
    """
    Partial cavity of a binary edge with finite entries for the sending cavity `B = (0, z)`, in closed form.
    """
    return binary_edge_terms(table, transposed=transposed).mu(z)
