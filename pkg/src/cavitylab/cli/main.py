"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import argparse
import json
import logging
import os
import sys
from collections.abc import Sequence
from typing import Any, NoReturn

from validataclass.exceptions import ValidationError

from cavitylab.exceptions import CavityLabError
from .commands import COMMAND_HANDLERS
from .config import COMMANDS, GRAPH_KINDS, MODEL_KINDS, resolve_seed, validate_config

__all__ = [
    'EXIT_DOMAIN_ERROR',
    'EXIT_OK',
    'EXIT_USAGE_ERROR',
    'UsageError',
    'build_parser',
    'main',
]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE_ERROR = 1
EXIT_DOMAIN_ERROR = 2

# Commands with a positional instance file argument
_INPUT_COMMANDS = ['solve-exact', 'ce', 'mwis']


class UsageError(Exception):
    """
    Raised by the argument parser instead of exiting the interpreter.
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> dict[str, Any]:
        return {'code': 'usage_error', 'reason': self.message}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _add_options(parser: argparse.ArgumentParser) -> None:
    # All defaults are None: defaults live in CliConfig.
    files = parser.add_argument_group('files')
    files.add_argument('-o', '--output', help='output file (default: stdout)')
    files.add_argument('--json-out', help='additionally write the JSON report to this file')
    files.add_argument('--format', choices=['json', 'csv'], help='output format of experiment reports')

    execution = parser.add_argument_group('execution')
    execution.add_argument('--seed', type=int, help='master seed (overrides CAVITYLAB_SEED)')
    execution.add_argument('--threads', type=int, help='maximum number of worker threads')
    execution.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])

    model = parser.add_argument_group('model')
    model.add_argument('--model', choices=MODEL_KINDS)
    model.add_argument('--i1', type=float, help='uniform model: half width of node potentials')
    model.add_argument('--i2', type=float, help='uniform model: half width of edge potentials')
    model.add_argument('--sigma-e', type=float, help='gaussian model: edge standard deviation')
    model.add_argument('--sigma-p', type=float, help='gaussian model: node standard deviation')
    model.add_argument('--rho', type=float, help='mixture weights: rate ratio')
    model.add_argument('--components', type=int, help='mixture weights: number of components')
    model.add_argument('--component', type=int, help='moment-check: mixture component k of the check node')
    model.add_argument('--p', type=float, help='map estimation: prior probability of a hidden cause')
    model.add_argument('--sigma-o', type=float, help='map estimation: observation noise')

    graph = parser.add_argument_group('graph')
    graph.add_argument('--graph', choices=GRAPH_KINDS)
    graph.add_argument('--n', type=int, help='number of nodes')
    graph.add_argument('--d', type=int, help='degree of random regular graphs')
    graph.add_argument('--rows', type=int)
    graph.add_argument('--cols', type=int)
    graph.add_argument('--edge-p', type=float, help='edge probability of erdos_renyi graphs')
    graph.add_argument('--dmax', type=int, help='degree cap of erdos_renyi graphs')
    graph.add_argument('--graph-seed', type=int)

    algorithm = parser.add_argument_group('algorithms and experiments')
    algorithm.add_argument('--depth', type=int, help='cavity expansion depth r')
    algorithm.add_argument('--full', action='store_true', default=None, help='ce: run without depth truncation')
    algorithm.add_argument('--depths', type=int, nargs='+')
    algorithm.add_argument('--boundary', choices=['zero', 'potential_gap'])
    algorithm.add_argument('--epsilon', type=float)
    algorithm.add_argument('--bound', choices=['minus', 'plus'])
    algorithm.add_argument('--trials', type=int)
    algorithm.add_argument('--delta', type=int, help='maximum degree')
    algorithm.add_argument('--node', type=int)
    algorithm.add_argument('--x', type=float)
    algorithm.add_argument('--x-prime', type=float)
    algorithm.add_argument('--lemma-samples', type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog='cavitylab',
        description='Cavity expansion toolkit for decision networks.',
        allow_abbrev=False,
    )
    subparsers = parser.add_subparsers(dest='command', metavar='command', required=True)
    for command in COMMANDS:
        subparser = subparsers.add_parser(command, allow_abbrev=False)
        if command in _INPUT_COMMANDS:
            subparser.add_argument('input', help='instance file (decision network or weighted graph JSON)')
        _add_options(subparser)
    return parser


def _print_error(error: dict[str, Any]) -> None:
    print(json.dumps({'error': error}), file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Command line entry point. Returns the exit code: 0 on success, 1 on usage and validation errors and 2 on domain
    errors. Errors are written to stderr as JSON.
    """
    try:
        arguments = vars(build_parser().parse_args(argv))
        arguments['seed'] = resolve_seed(arguments.get('seed'), os.environ)
        config = validate_config(arguments)
    except UsageError as error:
        _print_error(error.to_dict())
        return EXIT_USAGE_ERROR
    except ValidationError as error:
        _print_error({'code': 'invalid_config', 'fields': error.to_dict()})
        return EXIT_USAGE_ERROR

    logging.basicConfig(
        level=config.log_level,
        stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        force=True,
    )
    logger.info('Running %s with config %s', config.command, config.to_dict())

    try:
        COMMAND_HANDLERS[config.command](config)
    except CavityLabError as error:
        logger.debug('Command %s failed: %r', config.command, error)
        _print_error(error.to_dict())
        return EXIT_DOMAIN_ERROR
    except OSError as error:
        _print_error({'code': 'io_error', 'reason': error.strerror or str(error), 'path': error.filename})
        return EXIT_DOMAIN_ERROR
    return EXIT_OK
