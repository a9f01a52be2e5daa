"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math

import pytest

from cavitylab.cavity import ConstantBoundary, PotentialGapBoundary, SeededUniformBoundary, ZeroBoundary
from cavitylab.exceptions import InfeasibleReferenceError, InvalidOptionException
from cavitylab.network import NEG_INF, as_view
from tests.test_utils import k2_mwis


class BoundaryConditionsTest:
    """
    Tests for the boundary conditions of the cavity expansion.
    """

    @staticmethod
    def test_action_zero_is_zero():
        """ Tests that every boundary condition returns 0 for action 0. """
        view = as_view(k2_mwis())
        for boundary in [ZeroBoundary(), PotentialGapBoundary(), ConstantBoundary(2.5), SeededUniformBoundary(1, 2, 0)]:
            assert boundary(view, 0, 0) == 0.0

    @staticmethod
    def test_values():
        """ Tests the boundary values for action 1. """
        view = as_view(k2_mwis(2.0, 3.0)).add_delta(1, (0.5, 0.0))

        assert ZeroBoundary()(view, 0, 1) == 0.0
        assert PotentialGapBoundary()(view, 0, 1) == 2.0
        assert PotentialGapBoundary()(view, 1, 1) == 2.5
        assert ConstantBoundary(-1.5)(view, 1, 1) == -1.5

    @staticmethod
    def test_values_relative_to_reference():
        """ Tests boundary values relative to a reference action other than 0. """
        view = as_view(k2_mwis(2.0, 3.0)).add_delta(1, (NEG_INF, 0.0))

        assert ZeroBoundary()(view, 1, 0, reference=1) == 0.0
        assert ConstantBoundary(1.5)(view, 1, 0, reference=1) == -1.5
        assert ConstantBoundary(1.5)(view, 1, 1, reference=1) == 0.0
        assert PotentialGapBoundary()(view, 1, 0, reference=1) == NEG_INF
        assert PotentialGapBoundary()(view, 0, 0, reference=1) == -2.0

        with pytest.raises(InfeasibleReferenceError):
            PotentialGapBoundary()(view, 1, 1)

    @staticmethod
    def test_seeded_uniform_is_deterministic():
        """ Tests that seeded values depend only on seed, node and action. """
        boundary = SeededUniformBoundary(-1.0, 1.0, seed=5)
        value = boundary(as_view(k2_mwis()), 1, 1)

        assert -1.0 <= value < 1.0
        assert boundary(as_view(k2_mwis()).remove(0), 1, 1) == value
        assert SeededUniformBoundary(-1.0, 1.0, seed=5)(as_view(k2_mwis()), 1, 1) == value

    @staticmethod
    def test_names():
        """ Tests the names used in reports. """
        assert ZeroBoundary().name == 'zero'
        assert PotentialGapBoundary().name == 'potential_gap'
        assert ConstantBoundary(1.5).name == 'constant(1.5)'
        assert repr(ZeroBoundary()) == "ZeroBoundary('zero')"

    @staticmethod
    @pytest.mark.parametrize('factory', [
        lambda: ConstantBoundary(math.inf),
        lambda: SeededUniformBoundary(1.0, 0.0, seed=0),
        lambda: SeededUniformBoundary(0.0, math.nan, seed=0),
    ])
    def test_invalid_options(factory):
        """ Tests that invalid options raise InvalidOptionException. """
        with pytest.raises(InvalidOptionException):
            factory()
