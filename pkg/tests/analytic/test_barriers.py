# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
import math

import pytest

from deadcore.analytic.barriers import barrierPhi, barrierPsi, isStrictSubsolution, nondegeneracyThreshold
from deadcore.analytic.radial import tau
from deadcore.exceptions import InvalidParams, SingularPoint


# ******************************************************************************
class TestBarrierPsi:
    # **************************************************************************
    def test_EqualityCase(self):
        c = tau(1.0, 1.0)
        value, infLap = barrierPsi(c, 1.0, (1.0, 0.0), (0.0, 0.0))
        assert value == pytest.approx(c)
        assert infLap == pytest.approx(1.0 * value ** 1.0, rel=1e-12)

    # **************************************************************************
    @pytest.mark.parametrize('gamma', [0.0, 1.0, 2.0])
    def test_Subsolution(self, gamma):
        lam = 3.0
        c = 0.5 * nondegeneracyThreshold(lam, gamma)
        assert isStrictSubsolution(c, lam, gamma)
        for rho in [0.1, 0.5, 2.0]:
            value, infLap = barrierPsi(c, gamma, (0.0, rho), (0.0, 0.0))
            assert infLap < lam * value ** gamma

    # **************************************************************************
    def test_NotSubsolution(self):
        assert not isStrictSubsolution(tau(2.0, 1.0), 2.0, 1.0)
        assert not isStrictSubsolution(0.0, 2.0, 1.0)

    # **************************************************************************
    def test_Singular(self):
        with pytest.raises(SingularPoint):
            barrierPsi(1.0, 1.0, (0.5, 0.5), (0.5, 0.5))


# ******************************************************************************
class TestBarrierPhi:
    # **************************************************************************
    def test_Shape(self):
        lamB, d = 4.0, 1.0
        top = math.exp(-lamB * 0.25) - math.exp(-lamB)
        assert barrierPhi(lamB, d, (0.0, 0.0)) == pytest.approx(top)
        assert barrierPhi(lamB, d, (0.3, 0.0)) == pytest.approx(top)
        assert barrierPhi(lamB, d, (0.0, 0.75)) == pytest.approx(math.exp(-lamB * 0.5625) - math.exp(-lamB))
        assert barrierPhi(lamB, d, (1.0, 0.0)) == pytest.approx(0.0, abs=1e-15)
        assert barrierPhi(lamB, d, (1.5, 0.0)) == 0.0

    # **************************************************************************
    def test_Invalid(self):
        with pytest.raises(InvalidParams):
            barrierPhi(4.0, 0.0, (0.0, 0.0))

# ******************************************************************************
