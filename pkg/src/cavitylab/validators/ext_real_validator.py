"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math
from typing import Any

from validataclass.exceptions import InvalidTypeError, NonFiniteNumberError, ValueNotAllowedError
from validataclass.validators import Validator

__all__ = [
    'ExtRealValidator',
]

NEG_INF = float('-inf')


class ExtRealValidator(Validator):
    """
    Validator for extended real numbers as they appear in instance files: finite numbers or negative infinity.

    Negative infinity is written as the string `"-inf"` in JSON. For convenience, the float `-inf` is accepted as well
    (e.g. when validating data that was not parsed from JSON). Integers are converted to floats.

    Examples:

    ```
    validator = ExtRealValidator()
    validator.validate(1)       # 1.0
    validator.validate(-0.5)    # -0.5
    validator.validate('-inf')  # NEG_INF
    validator.validate('inf')   # raises ValueNotAllowedError
    ```

    Valid input: `float`, `int` or the string `"-inf"`
    Output: `float` (finite or `NEG_INF`)
    """

    def validate(self, input_data: Any, **kwargs: Any) -> float:
        """
        Validates input data. Returns a float.
        """
        if type(input_data) is str:
            if input_data != '-inf':
                raise ValueNotAllowedError(allowed_values=['-inf'])
            return NEG_INF

        try:
            self._ensure_type(input_data, [float, int])
        except InvalidTypeError:
            raise InvalidTypeError(expected_types=[float, int, 'str']) from None

        value = float(input_data)
        if value == NEG_INF:
            return NEG_INF
        if not math.isfinite(value):
            raise NonFiniteNumberError()
        return value
