"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import csv
import io
import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any

__all__ = [
    'CSV_COLUMNS',
    'ExperimentReport',
    'ReportRow',
]

CSV_COLUMNS = ('experiment', 'model', 'graph', 'n', 'delta', 'r', 'trials', 'estimate', 'stderr', 'excluded', 'seed')


def _csv_value(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass(frozen=True)
class ReportRow:
    """
    One row of an experiment report, typically one depth of one configuration.

    `trials` is the number of trials that entered the estimate, `excluded` the number of trials left out (infeasible
    or non-unique instances, depending on the experiment). Experiment specific values go into `extra`, which is part of
    the JSON output only.
    """
    experiment: str
    model: str
    graph: str
    n: int
    delta: int
    r: int | None
    trials: int
    estimate: float | None
    stderr: float | None
    excluded: int
    seed: int
    extra: Mapping[str, Any] = field(default_factory=dict)

    def csv_values(self) -> list[str]:
        return [_csv_value(getattr(self, column)) for column in CSV_COLUMNS]

    def to_dict(self) -> dict[str, Any]:
        return {
            **{column: getattr(self, column) for column in CSV_COLUMNS},
            'extra': dict(self.extra),
        }


@dataclass(frozen=True)
class ExperimentReport:
    """
    Result of an experiment: the resolved configuration, the master seed, the rows and the wall time in seconds.

    Running an experiment twice with the same configuration and master seed reproduces every row bit-identically, for
    any number of worker threads. The wall time is the only field that differs and it is not part of the CSV output.
    """
    experiment: str
    config: Mapping[str, Any]
    seed: int
    rows: tuple[ReportRow, ...]
    wall_time: float

    def row(self, r: int | None) -> ReportRow:
        """
        Returns the first row of the given depth.
        """
        for row in self.rows:
            if row.r == r:
                return row
        raise KeyError(r)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(CSV_COLUMNS)
        for row in self.rows:
            writer.writerow(row.csv_values())
        return buffer.getvalue()

    def to_dict(self) -> dict[str, Any]:
        return {
            'experiment': self.experiment,
            'config': dict(self.config),
            'seed': self.seed,
            'rows': [row.to_dict() for row in self.rows],
            'wall_time': self.wall_time,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + '\n'
