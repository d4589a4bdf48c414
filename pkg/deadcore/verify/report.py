# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Experiment reports and their JSON-lines serialization.

One line per experiment with the keys ``name``, ``passed``, ``metrics``,
``notes`` and ``config_hash``; keys are sorted and no timing enters a line,
so identical configurations give identical bytes.
"""
# ******************************************************************************
import logging
from pathlib import Path
from typing import Any, Iterable

from pydantic import BaseModel, Field

from deadcore.constants import Rx
from deadcore.misc.utils import canonicalJson


# ******************************************************************************
class ExperimentReport(BaseModel):
    """Outcome of one experiment.

    ``passed`` is decided from ``metrics`` against thresholds that are
    themselves recorded in ``metrics``. An inconclusive experiment (the solve
    did not converge) is never passed.
    """
    name: str
    passed: bool
    metrics: dict[str, float] = Field(default_factory=dict)
    notes: str = ''
    inconclusive: bool = False

    class Config:
        frozen = True

    # **************************************************************************
    def record(self, hashValue: str) -> dict[str, Any]:
        record = {'name': self.name, 'passed': self.passed, 'metrics': dict(self.metrics),
                  'notes': self.notes, 'config_hash': hashValue}
        if self.inconclusive:
            record['inconclusive'] = True
        return record

    # **************************************************************************
    @classmethod
    def inconclusiveReport(cls, name: str, notes: str, metrics: dict[str, float] | None = None) -> 'ExperimentReport':
        return cls(name=name, passed=False, metrics=metrics or {}, notes=notes, inconclusive=True)


# ******************************************************************************
def reportLines(reports: Iterable[ExperimentReport], hashValue: str) -> bytes:
    """JSON lines of the reports, each stamped with the configuration hash"""
    return b''.join(canonicalJson(report.record(hashValue)) + b'\n' for report in reports)


# ******************************************************************************
def writeReports(jsonlFile: Path, reports: list[ExperimentReport], hashValue: str) -> None:
    jsonlFile.write_bytes(reportLines(reports, hashValue))
    passed = sum(1 for r in reports if r.passed)
    logging.getLogger(Rx.ApplicationName).info(f'{passed}/{len(reports)} experiments passed ({jsonlFile})')


# ******************************************************************************
def allPassed(reports: list[ExperimentReport], allowInconclusive: bool = False) -> bool:
    """True iff every experiment passed; inconclusive ones count as failures unless allowed"""
    return all(r.passed or (allowInconclusive and r.inconclusive) for r in reports)


# ******************************************************************************
