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
from deadcore.exceptions import EmptyBall, InsufficientData, ZeroSamples
from deadcore.fbgeom.growth import dyadicFlatnessCheck, fitGrowthExponent, growthRadii, supOverBalls

# ******************************************************************************
Radii: list[float] = [0.25, 0.125, 0.0625, 0.03125]


# ******************************************************************************
@pytest.fixture(scope='module')
def grid():
    return makeGrid((0, 0), (1, 1), (129, 129))


def powerField(grid, C: float, alpha: float):
    return sampleFunction(grid, lambda x, y: C * np.maximum(x - 0.5, 0.0) ** alpha)


# ******************************************************************************
class TestSupOverBalls:
    # **************************************************************************
    def test_NodalMax(self, grid):
        samples = supOverBalls(powerField(grid, 1.0, 2.0), (0.5, 0.5), Radii)
        assert [r for r, _ in samples] == Radii
        for r, s in samples:
            assert s == pytest.approx(r * r)

    # **************************************************************************
    def test_EmptyBall(self, grid):
        with pytest.raises(EmptyBall):
            supOverBalls(powerField(grid, 1.0, 2.0), (0.501, 0.501), [1e-4])


# ******************************************************************************
class TestFitGrowthExponent:
    # **************************************************************************
    @pytest.mark.parametrize('alpha', [4.0 / 3.0, 2.0, 4.0])
    def test_ExactPower(self, grid, alpha):
        samples = supOverBalls(powerField(grid, 3.0, alpha), (0.5, 0.5), Radii)
        alphaHat, CHat = fitGrowthExponent(samples)
        assert alphaHat == pytest.approx(alpha, rel=1e-9)
        assert CHat == pytest.approx(3.0, rel=1e-8)

    # **************************************************************************
    def test_TooFew(self):
        with pytest.raises(InsufficientData):
            fitGrowthExponent([(0.1, 1.0), (0.2, 2.0), (0.4, 4.0)])

    # **************************************************************************
    def test_ZeroSamples(self):
        with pytest.raises(ZeroSamples):
            fitGrowthExponent([(r, 0.0) for r in Radii])

    # **************************************************************************
    def test_PartlyZero(self):
        with pytest.raises(InsufficientData):
            fitGrowthExponent([(0.4, 1.0), (0.2, 0.5), (0.1, 0.0), (0.05, 0.0)])


# ******************************************************************************
class TestRadiiAndFlatness:
    # **************************************************************************
    def test_GrowthRadii(self, grid):
        radii = growthRadii(grid, (0.5, 0.5))
        assert radii == pytest.approx([0.125, 0.0625, 0.03125])

    # **************************************************************************
    def test_FlatnessHolds(self, grid):
        flags = dyadicFlatnessCheck(powerField(grid, 1.0, 2.0), (0.5, 0.5), gamma=1.0, kMax=4)
        assert flags == [True] * 4

    # **************************************************************************
    def test_LinearGrowthFails(self, grid):
        flags = dyadicFlatnessCheck(powerField(grid, 1.0, 1.0), (0.5, 0.5), gamma=1.0, kMax=4)
        assert flags[0] and not any(flags[1:])

    # **************************************************************************
    def test_StopsBelowCell(self, grid):
        flags = dyadicFlatnessCheck(powerField(grid, 1.0, 2.0), (0.5, 0.5), gamma=1.0, kMax=20)
        assert len(flags) == 6

# ******************************************************************************
