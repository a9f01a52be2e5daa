"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import numpy as np

from cavitylab.exceptions import InvalidParamsError

__all__ = [
    'StreamKey',
    'keyed_rng',
    'keyed_seed',
    'keyed_uniform',
]


class StreamKey:
    """
    Integer namespaces for keyed random streams, so that e.g. the stream of node 3 in the weight sampler never collides
    with the stream of node 3 in the deletion phase.
    """
    NODE_POTENTIAL = 1
    EDGE_TABLE = 2
    GRAPH = 3
    WEIGHTS = 4
    DELETION = 5
    BOUNDARY = 6
    TRIAL = 7
    ROOT = 8
    LATENT = 9


def _seed_sequence(seed: int, keys: tuple[int, ...]) -> np.random.SeedSequence:
    if seed < 0:
        raise InvalidParamsError(parameter='seed', reason='Seeds must be non-negative integers.')
    return np.random.SeedSequence(entropy=seed, spawn_key=tuple(int(key) for key in keys))


def keyed_rng(seed: int, *keys: int) -> np.random.Generator:
    """
    Returns a random generator for the stream identified by `(seed, *keys)`.

    The stream depends only on the seed and the keys (counter-based Philox generator on a spawned `SeedSequence`), never
    on how many numbers other streams have drawn before. This makes every random quantity of an instance or experiment
    independent of evaluation order and thread scheduling.
    """
    return np.random.Generator(np.random.Philox(_seed_sequence(seed, keys)))


def keyed_uniform(seed: int, *keys: int, low: float = 0.0, high: float = 1.0) -> float:
    """
    Returns a single uniform sample from `[low, high)` for the stream `(seed, *keys)`.
    """
    return float(keyed_rng(seed, *keys).uniform(low, high))


def keyed_seed(seed: int, *keys: int) -> int:
    """
    Derives a new 63-bit seed for the stream `(seed, *keys)`, e.g. the seed of a single trial of an experiment.
    """
    state = _seed_sequence(seed, keys).generate_state(1, dtype=np.uint64)
    return int(state[0]) >> 1
