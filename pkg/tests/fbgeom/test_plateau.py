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
from deadcore.exceptions import BoundaryNode, EmptyBoundary, InvalidParams
from deadcore.fbgeom.plateau import extractPlateau, freeBoundaryAnchors, refineAnchor


# ******************************************************************************
class TestPlateau:
    # **************************************************************************
    @pytest.fixture(scope='class')
    def field(self):
        grid = makeGrid((0, 0), (1, 1), (17, 17))
        return sampleFunction(grid, lambda x, y: np.maximum(x - 0.5, 0.0) ** 2)

    # **************************************************************************
    def test_HalfPlane(self, field):
        mask = extractPlateau(field)
        assert mask.plateau[:9].all() and not mask.plateau[9:].any()
        assert mask.freeBoundary[8].all()
        assert mask.freeBoundary.sum() == 17
        assert mask.hasFreeBoundary
        assert (mask.positive == ~mask.plateau).all()

    # **************************************************************************
    def test_Threshold(self, field):
        h = field.grid.h
        mask = extractPlateau(field, delta=1.5 * h * h)
        assert mask.freeBoundary[9].all()
        assert mask.delta == 1.5 * h * h

    # **************************************************************************
    def test_NoPlateau(self):
        grid = makeGrid((0, 0), (1, 1), (9, 9))
        mask = extractPlateau(ScalarField.constant(grid, 1.0))
        assert not mask.plateau.any()
        assert not mask.hasFreeBoundary
        assert mask.freeBoundaryNodes().shape == (0, 2)

    # **************************************************************************
    def test_WholePlateau(self):
        grid = makeGrid((0, 0), (1, 1), (9, 9))
        mask = extractPlateau(ScalarField.constant(grid, 0.0))
        assert mask.plateau.all()
        assert not mask.hasFreeBoundary

    # **************************************************************************
    def test_NegativeDelta(self, field):
        with pytest.raises(InvalidParams):
            extractPlateau(field, -1.0)

    # **************************************************************************
    def test_Anchors(self, field):
        mask = extractPlateau(field)
        anchors = freeBoundaryAnchors(mask, 4, margin=0.25)
        assert len(anchors) == 4
        assert all(i == 8 for i, _ in anchors)
        assert anchors[0] == (8, 4) and anchors[-1] == (8, 12)
        assert freeBoundaryAnchors(mask, 100) == [tuple(n) for n in mask.freeBoundaryNodes().tolist()]

    # **************************************************************************
    def test_NoAnchor(self, field):
        with pytest.raises(EmptyBoundary):
            freeBoundaryAnchors(extractPlateau(field), 3, margin=0.6)

    # **************************************************************************
    def test_Refine(self, field):
        mask = extractPlateau(field)
        x, y = refineAnchor(field, mask, (8, 6))
        assert x == pytest.approx(0.5 + 0.5 * field.grid.h)
        assert y == pytest.approx(6 * field.grid.h)
        with pytest.raises(BoundaryNode):
            refineAnchor(field, mask, (8, 0))

# ******************************************************************************
