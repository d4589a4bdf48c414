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
import pytest

from deadcore.core.field import sampleFunction
from deadcore.core.grid import makeGrid
from deadcore.exceptions import EmptyBall, EmptyBoundary, InsufficientData, ScaleUnderResolved
from deadcore.fbgeom.boxcount import boxCount, boxDimension, defaultScales
from deadcore.fbgeom.density import porosityWitness, positiveDensity
from deadcore.fbgeom.plateau import extractPlateau


# ******************************************************************************
@pytest.fixture(scope='module')
def halfPlane():
    grid = makeGrid((0, 0), (1, 1), (129, 129))
    field = sampleFunction(grid, lambda x, y: np.maximum(x - 0.5, 0.0) ** 2)
    return field, extractPlateau(field)


# ******************************************************************************
class TestDensity:
    # **************************************************************************
    def test_HalfDisc(self, halfPlane):
        _, mask = halfPlane
        assert positiveDensity(mask, (0.5, 0.5), 0.25) == pytest.approx(0.5, abs=0.05)

    # **************************************************************************
    def test_InsidePositivePhase(self, halfPlane):
        _, mask = halfPlane
        assert positiveDensity(mask, (0.8, 0.5), 0.1) == pytest.approx(1.0, abs=0.05)
        assert positiveDensity(mask, (0.2, 0.5), 0.1) == 0.0

    # **************************************************************************
    def test_TooFewNodes(self, halfPlane):
        _, mask = halfPlane
        with pytest.raises(EmptyBall):
            positiveDensity(mask, (0.5, 0.5), 0.01)


# ******************************************************************************
class TestPorosity:
    # **************************************************************************
    def test_SeededByMaximiser(self, halfPlane):
        field, mask = halfPlane
        (x, y), radius = porosityWitness(mask, (0.5, 0.5), 0.25, field=field)
        assert (x, y) == pytest.approx((0.625, 0.5))
        assert radius == pytest.approx(0.125)

    # **************************************************************************
    def test_Search(self, halfPlane):
        _, mask = halfPlane
        (x, y), radius = porosityWitness(mask, (0.5, 0.5), 0.25)
        assert radius == pytest.approx(0.125)
        assert abs(x - 0.5) == pytest.approx(0.125)
        assert y == pytest.approx(0.5)

    # **************************************************************************
    def test_NoPore(self, halfPlane):
        field, mask = halfPlane
        assert porosityWitness(mask, (0.5, 0.5), 0.25, field=field, floor=0.6) is None


# ******************************************************************************
class TestBoxCounting:
    # **************************************************************************
    def test_Count(self):
        flags = np.zeros((5, 5), dtype=np.bool_)
        flags[4, 4] = True
        assert boxCount(flags, 2) == 1
        flags[0, 0] = flags[1, 1] = True
        assert boxCount(flags, 2) == 2
        flags[2, 2] = True
        assert boxCount(flags, 2) == 3
        assert boxCount(flags, 5) == 1

    # **************************************************************************
    def test_DefaultScales(self, halfPlane):
        _, mask = halfPlane
        h = mask.grid.h
        assert defaultScales(mask) == pytest.approx([2 * h, 4 * h, 8 * h, 16 * h, 32 * h])

    # **************************************************************************
    def test_StraightLine(self, halfPlane):
        _, mask = halfPlane
        assert boxDimension(mask) == pytest.approx(1.0, abs=0.1)

    # **************************************************************************
    def test_UnderResolved(self, halfPlane):
        _, mask = halfPlane
        h = mask.grid.h
        with pytest.raises(ScaleUnderResolved):
            boxDimension(mask, [h, 2 * h, 4 * h, 8 * h, 16 * h])

    # **************************************************************************
    @pytest.mark.parametrize('cells', [[2, 4, 8], [2, 2.5, 3, 4]])
    def test_TooFewScales(self, halfPlane, cells):
        _, mask = halfPlane
        with pytest.raises(InsufficientData):
            boxDimension(mask, [c * mask.grid.h for c in cells])

    # **************************************************************************
    def test_NoFreeBoundary(self):
        grid = makeGrid((0, 0), (1, 1), (33, 33))
        mask = extractPlateau(sampleFunction(grid, lambda x, y: 1.0 + x))
        with pytest.raises(EmptyBoundary):
            boxDimension(mask)

# ******************************************************************************
