"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import dataclasses
from collections.abc import Mapping
from typing import Any

from validataclass.dataclasses import Default, validataclass
from validataclass.exceptions import DataclassPostValidationError, RequiredValueError, ValidationError
from validataclass.validators import (
    AnyOfValidator,
    BooleanValidator,
    DataclassValidator,
    FloatValidator,
    IntegerValidator,
    ListValidator,
    Noneable,
    StringValidator,
)

__all__ = [
    'COMMANDS',
    'CliConfig',
    'GRAPH_KINDS',
    'MODEL_KINDS',
    'SEED_ENVIRONMENT_VARIABLE',
    'resolve_seed',
    'validate_config',
]

COMMANDS = [
    'gen',
    'solve-exact',
    'ce',
    'mwis',
    'decay',
    'misclass',
    'subopt',
    'mwis-ratio',
    'moment-check',
    'check-conditions',
    'mwis-misclass',
    'coupling',
]

MODEL_KINDS = ['uniform', 'gaussian', 'map_estimation', 'mwis_exp', 'mwis_mixture']

GRAPH_KINDS = ['cycle', 'path', 'grid', 'complete', 'star', 'empty', 'random_regular', 'erdos_renyi', 'tree']

SEED_ENVIRONMENT_VARIABLE = 'CAVITYLAB_SEED'

# Commands that read an instance file
_INPUT_COMMANDS = {'solve-exact', 'ce', 'mwis'}

# Commands that need a model
_MODEL_COMMANDS = {'gen', 'decay', 'misclass', 'subopt', 'check-conditions', 'coupling'}


@validataclass
class CliConfig:
    """
    Fully resolved configuration of one command line run. Every field has a default, so the validated config always
    contains the complete set of parameters, which is echoed in the JSON output of every command.
    """
    command: str = AnyOfValidator(COMMANDS, case_sensitive=True)

    # Files
    input: str | None = Noneable(StringValidator(min_length=1)), Default(None)
    output: str | None = Noneable(StringValidator(min_length=1)), Default(None)
    json_out: str | None = Noneable(StringValidator(min_length=1)), Default(None)
    format: str = AnyOfValidator(['json', 'csv']), Default('json')

    # Execution
    seed: int = IntegerValidator(min_value=0, max_value=None, allow_strings=True), Default(0)
    threads: int | None = Noneable(IntegerValidator(min_value=1)), Default(None)
    log_level: str = AnyOfValidator(['DEBUG', 'INFO', 'WARNING', 'ERROR']), Default('WARNING')

    # Model
    model: str | None = Noneable(AnyOfValidator(MODEL_KINDS)), Default(None)
    i1: float = FloatValidator(allow_integers=True), Default(1.0)
    i2: float = FloatValidator(allow_integers=True), Default(0.04)
    sigma_e: float = FloatValidator(allow_integers=True), Default(0.1)
    sigma_p: float = FloatValidator(allow_integers=True), Default(1.0)
    rho: float = FloatValidator(allow_integers=True), Default(26.0)
    components: int = IntegerValidator(min_value=1), Default(2)
    component: int = IntegerValidator(min_value=1), Default(1)
    p: float = FloatValidator(allow_integers=True), Default(0.5)
    sigma_o: float = FloatValidator(allow_integers=True), Default(1.0)

    # Graph
    graph: str = AnyOfValidator(GRAPH_KINDS), Default('cycle')
    n: int = IntegerValidator(min_value=0), Default(10)
    d: int = IntegerValidator(min_value=0), Default(3)
    rows: int = IntegerValidator(min_value=1), Default(3)
    cols: int = IntegerValidator(min_value=1), Default(3)
    edge_p: float = FloatValidator(min_value=0, max_value=1, allow_integers=True), Default(0.5)
    dmax: int = IntegerValidator(min_value=0), Default(3)
    graph_seed: int = IntegerValidator(min_value=0, max_value=None), Default(0)

    # Algorithms and experiments
    depth: int | None = Noneable(IntegerValidator(min_value=0)), Default(None)
    full: bool = BooleanValidator(), Default(False)
    depths: list[int] = ListValidator(IntegerValidator(min_value=0), min_length=1), Default([2, 4, 6, 8])
    boundary: str = AnyOfValidator(['zero', 'potential_gap']), Default('zero')
    epsilon: float = FloatValidator(min_value=0, max_value=1, allow_integers=True), Default(0.15)
    bound: str = AnyOfValidator(['minus', 'plus']), Default('minus')
    trials: int = IntegerValidator(min_value=1, max_value=None), Default(200)
    delta: int | None = Noneable(IntegerValidator(min_value=2)), Default(None)
    node: int = IntegerValidator(min_value=0), Default(0)
    x: float = FloatValidator(allow_integers=True), Default(0.3)
    x_prime: float = FloatValidator(allow_integers=True), Default(0.1)
    lemma_samples: int | None = Noneable(IntegerValidator(min_value=1, max_value=None)), Default(None)

    def __post_validate__(self) -> None:
        field_errors: dict[str, ValidationError] = {}
        if self.command in _INPUT_COMMANDS and self.input is None:
            field_errors['input'] = RequiredValueError(reason=f"Command '{self.command}' needs an input file.")
        if self.command in _MODEL_COMMANDS and self.model is None:
            field_errors['model'] = RequiredValueError(reason=f"Command '{self.command}' needs --model.")
        if self.command == 'check-conditions' and self.delta is None:
            field_errors['delta'] = RequiredValueError(reason="Command 'check-conditions' needs --delta.")
        if self.command == 'mwis' and self.depth is None:
            field_errors['depth'] = RequiredValueError(reason="Command 'mwis' needs --depth.")
        if self.command == 'ce' and self.depth is None and not self.full:
            field_errors['depth'] = RequiredValueError(reason="Command 'ce' needs --depth or --full.")
        if field_errors:
            raise DataclassPostValidationError(field_errors=field_errors)

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)


def resolve_seed(flag_value: int | None, environment: Mapping[str, str]) -> int | str:
    """
    Seed precedence: the `--seed` flag, then the environment variable `CAVITYLAB_SEED`, then 0. Values from the
    environment are returned as strings and parsed by the config validation.
    """
    if flag_value is not None:
        return flag_value
    return environment.get(SEED_ENVIRONMENT_VARIABLE, 0)


def validate_config(arguments: Mapping[str, Any]) -> CliConfig:
    """
    Validates parsed command line arguments. Arguments that are None are left out, so their defaults apply.

    Raises a `ValidationError` on invalid or missing values.
    """
    return DataclassValidator(CliConfig).validate({key: value for key, value in arguments.items() if value is not None})
