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

from deadcore.core.grid import BallSpec, SquareCellTolerance, makeGrid
from deadcore.exceptions import EmptyBall, InvalidParams, NonSquareCells, TooCoarse


# ******************************************************************************
class TestMakeGrid:
    # **************************************************************************
    def test_UnitSquare(self):
        grid = makeGrid((0, 0), (1, 1), (3, 3))
        assert grid.h == 0.5
        assert grid.shape == (3, 3)
        assert grid.nodeCount == 9
        assert grid.position((1, 2)) == (0.5, 1.0)

    # **************************************************************************
    def test_Rectangle(self):
        grid = makeGrid((-1, 2), (2, 1), (9, 5))
        assert grid.h == 0.25
        np.testing.assert_allclose(grid.xs, np.linspace(-1, 1, 9))
        np.testing.assert_allclose(grid.ys, np.linspace(2, 3, 5))

    # **************************************************************************
    def test_NonSquare(self):
        with pytest.raises(NonSquareCells):
            makeGrid((0, 0), (1, 1), (3, 4))

    # **************************************************************************
    def test_SquareCellTolerance(self):
        assert SquareCellTolerance == 1e-12
        with pytest.raises(NonSquareCells):
            makeGrid((0, 0), (1.0, 1.0 + 1e-10), (33, 33))
        grid = makeGrid((0, 0), (1.0, 1.0 + 1e-14), (33, 33))
        assert grid.h == pytest.approx(1 / 32)

    # **************************************************************************
    @pytest.mark.parametrize('resolution', [(2, 3), (3, 2), (1, 1)])
    def test_TooCoarse(self, resolution):
        with pytest.raises(TooCoarse):
            makeGrid((0, 0), (1, 1), resolution)

    # **************************************************************************
    def test_BadExtent(self):
        with pytest.raises(InvalidParams):
            makeGrid((0, 0), (0, 1), (3, 3))


# ******************************************************************************
class TestGridQueries:
    # **************************************************************************
    @pytest.fixture(scope='class')
    def grid(self):
        return makeGrid((0, 0), (1, 1), (5, 5))

    # **************************************************************************
    def test_BoundaryMask(self, grid):
        mask = grid.boundaryMask()
        assert mask.sum() == 16
        assert not mask[1:-1, 1:-1].any()
        assert grid.isBoundary((0, 2)) and grid.isBoundary((4, 4))
        assert not grid.isBoundary((2, 2))

    # **************************************************************************
    def test_MeshgridIndexing(self, grid):
        X, Y = grid.meshgrid()
        assert X[3, 1] == 0.75
        assert Y[3, 1] == 0.25

    # **************************************************************************
    def test_Geometry(self, grid):
        assert grid.contains((1.0, 0.0))
        assert not grid.contains((1.1, 0.5))
        assert grid.distanceToEdge((0.25, 0.5)) == 0.25
        assert grid.nearestNode((0.6, 0.9)) == (2, 4)
        assert grid.nearestNode((5.0, -1.0)) == (4, 0)

    # **************************************************************************
    def test_SameAs(self, grid):
        assert grid.sameAs(makeGrid((0, 0), (1, 1), (5, 5)))
        assert not grid.sameAs(makeGrid((0, 0.5), (1, 1), (5, 5)))
        assert not grid.sameAs(makeGrid((0, 0), (1, 1), (9, 9)))


# ******************************************************************************
class TestBallSpec:
    # **************************************************************************
    def test_Mask(self):
        grid = makeGrid((-1, -1), (2, 2), (5, 5))
        mask = BallSpec(center=(0, 0), radius=0.5).mask(grid)
        assert mask.sum() == 5
        assert mask[2, 2] and mask[1, 2] and not mask[1, 1]

    # **************************************************************************
    def test_ClosedBall(self):
        grid = makeGrid((-1, -1), (2, 2), (5, 5))
        assert BallSpec(center=(0, 0), radius=1.0).mask(grid)[0, 2]

    # **************************************************************************
    def test_Empty(self):
        grid = makeGrid((0, 0), (1, 1), (3, 3))
        with pytest.raises(EmptyBall):
            BallSpec(center=(0.25, 0.25), radius=0.1).mask(grid)

    # **************************************************************************
    def test_Validation(self):
        with pytest.raises(ValueError):
            BallSpec(center=(0, 0), radius=0)
        with pytest.raises(ValueError):
            BallSpec(center=(float('nan'), 0), radius=1)

# ******************************************************************************
