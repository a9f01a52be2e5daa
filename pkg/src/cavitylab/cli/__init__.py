"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from .config import CliConfig, resolve_seed, validate_config
from .main import main

__all__ = [
    'CliConfig',
    'main',
    'resolve_seed',
    'validate_config',
]
