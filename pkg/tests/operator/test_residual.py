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

from deadcore.core.field import ScalarField, sampleFunction
from deadcore.core.grid import makeGrid
from deadcore.core.params import Params
from deadcore.operator.residual import absorption, residualField


# ******************************************************************************
class TestAbsorption:
    # **************************************************************************
    def test_PositivePart(self):
        values = np.array([-1.0, 0.0, 0.5, 2.0])
        lam = np.full(4, 3.0)
        np.testing.assert_allclose(absorption(values, lam, 2.0), [0.0, 0.0, 0.75, 12.0])

    # **************************************************************************
    def test_ZeroExponentIsIndicator(self):
        values = np.array([-1.0, 0.0, 1e-300, 2.0])
        np.testing.assert_array_equal(absorption(values, np.full(4, 2.0), 0.0), [0.0, 0.0, 2.0, 2.0])


# ******************************************************************************
class TestResidualField:
    # **************************************************************************
    @pytest.fixture(scope='class')
    def grid(self):
        return makeGrid((0, 0), (1, 1), (17, 17))

    # **************************************************************************
    def test_Constant(self, grid):
        field = ScalarField.constant(grid, 2.0)
        residual = residualField(field, Params(gamma=2.0, lam=3.0))
        interior = ~grid.boundaryMask()
        assert np.allclose(residual.values[interior], -12.0)
        assert (residual.values[~interior] == 0).all()

    # **************************************************************************
    def test_FixedNodes(self, grid):
        field = ScalarField.constant(grid, 1.0)
        fixed = np.zeros(grid.shape, dtype=np.bool_)
        fixed[4:8, 4:8] = True
        residual = residualField(field, Params(gamma=1.0, lam=1.0), fixedMask=fixed)
        assert (residual.values[fixed] == 0).all()
        assert residual[10, 10] == pytest.approx(-1.0)

    # **************************************************************************
    def test_ZeroOnPlateau(self, grid):
        field = ScalarField.constant(grid, 0.0)
        for gamma in [0.0, 1.0]:
            assert residualField(field, Params(gamma=gamma, lam=5.0)).supNorm() == 0.0

    # **************************************************************************
    def test_VariableLambda(self, grid):
        X, _ = grid.meshgrid()
        params = Params(gamma=1.0, lam=ScalarField(grid, X))
        residual = residualField(ScalarField.constant(grid, 1.0), params)
        assert residual[8, 3] == pytest.approx(-0.5)

    # **************************************************************************
    @pytest.mark.parametrize('scheme', ['minmax', 'interp'])
    def test_InfinityHarmonicCone(self, scheme):
        grid = makeGrid((0, 0), (1, 1), (33, 33))
        field = sampleFunction(grid, lambda x, y: 0.8 * x + 0.6 * y)
        residual = residualField(field, Params(gamma=1.0, lam=0.0, scheme=scheme))
        assert residual.supNorm() <= 1e-8

# ******************************************************************************
