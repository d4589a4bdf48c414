# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
import numpy as np
import orjson
import pytest

from deadcore.core.field import ScalarField, sampleFunction
from deadcore.core.grid import makeGrid
from deadcore.exceptions import EmptyBoundary
from deadcore.fbgeom.report import analyzeFreeBoundary

# ******************************************************************************
CoreRadius: float = 0.2
Radii: list[float] = [0.24, 0.12, 0.06, 0.03]


# ******************************************************************************
class TestAnalyzeFreeBoundary:
    # **************************************************************************
    @pytest.fixture(scope='class')
    def field(self):
        grid = makeGrid((0, 0), (1, 1), (257, 257))
        return sampleFunction(
            grid, lambda x, y: 0.5 * np.maximum(np.hypot(x - 0.5, y - 0.5) - CoreRadius, 0.0) ** 2)

    @pytest.fixture(scope='class')
    def analysis(self, field, tmp_path_factory):
        csvFile = tmp_path_factory.mktemp('fbgeom') / 'growth.csv'
        return analyzeFreeBoundary(field, gamma=1.0, delta=0.0, radii=Radii, supCsv=csvFile), csvFile

    # **************************************************************************
    def test_GrowthExponent(self, analysis):
        report, _ = analysis
        assert report.alphaExpected == 2.0
        assert report.alphaHat == pytest.approx(2.0, abs=0.3)
        assert report.CHat > 0.0

    # **************************************************************************
    def test_Anchors(self, analysis):
        report, _ = analysis
        assert 1 <= len(report.anchors) <= 8
        assert len(report.alphaSamples) == len(report.anchors)
        for anchor in report.anchors:
            assert np.hypot(anchor.x - 0.5, anchor.y - 0.5) == pytest.approx(CoreRadius, abs=2.0 / 256)

    # **************************************************************************
    def test_Geometry(self, analysis):
        report, _ = analysis
        assert report.densityMin > 0.35
        assert report.boxDimension == pytest.approx(1.0, abs=0.25)
        assert all(pore is not None for pore in report.porosityWitness)

    # **************************************************************************
    def test_Serialization(self, analysis):
        report, _ = analysis
        data = orjson.loads(report.toJson())
        assert {'alpha_hat', 'C_hat', 'alpha_expected', 'alpha_samples', 'density_min', 'box_dimension',
                'anchors', 'scales', 'porosity_witness'} == data.keys()

    # **************************************************************************
    def test_SupSamples(self, analysis):
        report, csvFile = analysis
        lines = csvFile.read_text(encoding='utf-8').splitlines()
        assert lines[0] == 'x0,y0,r,sup'
        assert len(lines) == 1 + len(Radii) * len(report.alphaSamples)

    # **************************************************************************
    def test_NoPlateau(self):
        field = ScalarField.constant(makeGrid((0, 0), (1, 1), (33, 33)), 1.0)
        with pytest.raises(EmptyBoundary):
            analyzeFreeBoundary(field, gamma=1.0, delta=0.0)

# ******************************************************************************
