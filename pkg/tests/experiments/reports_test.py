"""
cavitylab
Copyright (c) 2026, binary butterfly GmbH and contributors
Use of this source code is governed by an MIT-style license that can be found in the LICENSE file.
"""

import json

import pytest

from cavitylab.experiments import CSV_COLUMNS, ExperimentReport, ReportRow


def _row(r: int | None, estimate: float | None) -> ReportRow:
    return ReportRow(
        experiment='decay',
        model='uniform',
        graph='cycle',
        n=5,
        delta=2,
        r=r,
        trials=10,
        estimate=estimate,
        stderr=None if estimate is None else 0.25,
        excluded=0,
        seed=7,
        extra={'action': 1},
    )


ROWS = (_row(0, 0.5), _row(2, 0.1))


class ReportsTest:
    @staticmethod
    def test_csv_values():
        """ Tests that missing values are empty and floats keep their full precision. """
        assert _row(2, 0.1).csv_values() == ['decay', 'uniform', 'cycle', '5', '2', '2', '10', '0.1', '0.25', '0', '7']
        assert _row(None, None).csv_values()[5:9] == ['', '10', '', '']

    @staticmethod
    def test_to_csv():
        report = ExperimentReport(experiment='decay', config={}, seed=7, rows=ROWS, wall_time=1.0)
        lines = report.to_csv().splitlines()
        assert lines[0] == ','.join(CSV_COLUMNS)
        assert lines[2] == 'decay,uniform,cycle,5,2,2,10,0.1,0.25,0,7'
        assert len(lines) == 3

    @staticmethod
    def test_row_lookup():
        report = ExperimentReport(experiment='decay', config={}, seed=7, rows=ROWS, wall_time=1.0)
        assert report.row(2).estimate == 0.1
        with pytest.raises(KeyError):
            report.row(4)

    @staticmethod
    def test_to_json():
        """ Tests that the JSON output contains the config and the extra values of every row. """
        report = ExperimentReport(
            experiment='decay',
            config={'trials': 10},
            seed=7,
            rows=(_row(None, 0.5),),
            wall_time=0.5,
        )
        data = json.loads(report.to_json())
        assert data == report.to_dict()
        assert data['config'] == {'trials': 10}
        assert data['rows'][0]['r'] is None
        assert data['rows'][0]['extra'] == {'action': 1}
