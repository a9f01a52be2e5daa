"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

__all__ = [
    'InvalidOptionException',
]


# These are "meta exceptions" that are not domain errors, but rather logic errors in the calling code.
# For example when creating a boundary condition with an unknown kind.

class InvalidOptionException(ValueError):
    """
    Exception that is raised when a cavitylab object is created with invalid options (e.g. an unknown enum value that
    slipped past type checking, or two options that are mutually exclusive).

    (This is not a domain error.)
    """
