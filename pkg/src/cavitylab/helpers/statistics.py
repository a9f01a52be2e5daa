"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

__all__ = [
    'MeanEstimate',
]


@dataclass(frozen=True)
class MeanEstimate:
    """
    Monte-Carlo estimate of a mean: sample mean, standard error (sample standard deviation / sqrt(count)) and the
    number of samples. The mean and standard error are None if there are no samples.
    """
    mean: float | None
    stderr: float | None
    count: int

    @classmethod
    def from_samples(cls, samples: Sequence[float]) -> 'MeanEstimate':
        values = np.asarray(samples, dtype=np.float64)
        if values.size == 0:
            return cls(mean=None, stderr=None, count=0)
        if values.size == 1:
            return cls(mean=float(values[0]), stderr=0.0, count=1)
        return cls(
            mean=float(values.mean()),
            stderr=float(values.std(ddof=1) / math.sqrt(values.size)),
            count=int(values.size),
        )

    def z_score(self, reference: float) -> float:
        """
        Returns `(mean - reference) / stderr`. A zero standard error gives 0 if the mean equals the reference and
        signed infinity otherwise.
        """
        if self.mean is None or self.stderr is None:
            raise ValueError('z-score of an empty estimate is undefined.')
        difference = self.mean - reference
        if self.stderr == 0:
            return 0.0 if difference == 0 else math.copysign(math.inf, difference)
        return difference / self.stderr
