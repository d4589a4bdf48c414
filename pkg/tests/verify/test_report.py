# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
import orjson
import pytest

from deadcore.verify.report import ExperimentReport, allPassed, reportLines, writeReports

# ******************************************************************************
Hash: str = 'ab' * 32


# ******************************************************************************
class TestExperimentReport:
    # **************************************************************************
    @pytest.fixture(scope='class')
    def reports(self):
        return [ExperimentReport(name='first', passed=True, metrics={'b': 2.0, 'a': 1.0}),
                ExperimentReport(name='second', passed=False, notes='too large'),
                ExperimentReport.inconclusiveReport('third', 'did not converge', {'sweeps': 3.0})]

    # **************************************************************************
    def test_Record(self, reports):
        record = reports[0].record(Hash)
        assert record == {'name': 'first', 'passed': True, 'metrics': {'a': 1.0, 'b': 2.0}, 'notes': '',
                          'config_hash': Hash}
        assert reports[2].record(Hash)['inconclusive'] is True
        assert not reports[2].passed

    # **************************************************************************
    def test_Lines(self, reports):
        data = reportLines(reports, Hash)
        lines = data.split(b'\n')
        assert lines[-1] == b'' and len(lines) == 4
        assert lines[0].startswith(b'{"config_hash":')
        assert [orjson.loads(line)['name'] for line in lines[:-1]] == ['first', 'second', 'third']
        assert reportLines(reports, Hash) == data

    # **************************************************************************
    def test_Write(self, reports, tmp_path):
        jsonlFile = tmp_path / 'verify.jsonl'
        writeReports(jsonlFile, reports, Hash)
        assert jsonlFile.read_bytes() == reportLines(reports, Hash)

    # **************************************************************************
    def test_AllPassed(self, reports):
        assert allPassed(reports[:1])
        assert not allPassed(reports[:2])
        assert not allPassed([reports[0], reports[2]])
        assert allPassed([reports[0], reports[2]], allowInconclusive=True)
        assert allPassed([])

    # **************************************************************************
    def test_Frozen(self, reports):
        with pytest.raises(Exception):
            reports[0].passed = False

# ******************************************************************************
