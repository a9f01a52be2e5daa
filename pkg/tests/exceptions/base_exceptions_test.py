"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import pytest

from cavitylab.exceptions import CavityLabError


class CavityLabErrorTest:
    """
    Tests for the CavityLabError exception class.
    """

    @staticmethod
    @pytest.mark.parametrize(
        'code, kwargs, expected_repr',
        [
            (
                None,
                {},
                "CavityLabError(code='unknown_error')",
            ),
            (
                'unit_test_error',
                {},
                "CavityLabError(code='unit_test_error')",
            ),
            (
                None,
                {'reason': 'This is fine.'},
                "CavityLabError(code='unknown_error', reason='This is fine.')",
            ),
            (
                'unit_test_error',
                {'reason': 'This is fine.', 'parameter': 'depth', 'limit': 123},
                "CavityLabError(code='unit_test_error', reason='This is fine.', parameter='depth', limit=123)",
            ),
        ],
    )
    def test_error_with_parameters(code, kwargs, expected_repr):
        """ Tests CavityLabError with various parameters. """
        error = CavityLabError(code=code, **kwargs)

        expected_code = code if code is not None else 'unknown_error'
        assert repr(error) == expected_repr
        assert str(error) == repr(error)
        assert error.to_dict() == {
            'code': expected_code,
            **kwargs,
        }

    @staticmethod
    def test_none_fields_are_dropped():
        """ Tests that extra fields with the value None are not part of the error dictionary. """
        error = CavityLabError(node=3, edge=None)
        assert error.to_dict() == {'code': 'unknown_error', 'node': 3}

    @staticmethod
    def test_error_subclass():
        """ Tests subclassing CavityLabError with a class level code. """

        class UnitTestError(CavityLabError):
            code = 'unit_test_error'

        error = UnitTestError(reason='Something happened.')
        assert repr(error) == "UnitTestError(code='unit_test_error', reason='Something happened.')"
        assert error.to_dict() == {'code': 'unit_test_error', 'reason': 'Something happened.'}
