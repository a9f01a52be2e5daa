"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

from .parallel import default_threads, ordered_map
from .random_streams import StreamKey, keyed_rng, keyed_seed, keyed_uniform
from .statistics import MeanEstimate

__all__ = [
    'MeanEstimate',
    'StreamKey',
    'default_threads',
    'keyed_rng',
    'keyed_seed',
    'keyed_uniform',
    'ordered_map',
]
