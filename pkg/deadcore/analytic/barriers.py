# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Explicit barrier functions.

``ψ(X) = c|X-X₀|^α`` is the power barrier behind the nondegeneracy estimate:
for ``c`` below :py:func:`nondegeneracyThreshold` it is a strict subsolution
of ``Δ∞u = λu^γ``. ``Φ`` is the Gaussian annulus barrier used in the
critical case ``γ = 3``.
"""
# ******************************************************************************
import math

from deadcore.analytic.radial import growthExponent, tau
from deadcore.core.grid import Point
from deadcore.exceptions import InvalidParams, SingularPoint


# ******************************************************************************
def barrierPsi(c: float, gamma: float, X: Point, X0: Point) -> tuple[float, float]:
    """Value and exact infinity Laplacian of ``ψ = c|X-X₀|^α``.

    ``Δ∞ψ = (cα)³(α-1)|X-X₀|^{3α-4}`` with ``α = 4/(3-γ)``.

    Raises:
        SingularPoint: at ``X = X0``.
    """
    rho = math.dist(X, X0)
    if rho == 0.0:
        raise SingularPoint(f'psi is not differentiable at its center {X0}')
    alpha = growthExponent(gamma)
    value = c * rho ** alpha
    infLap = (c * alpha) ** 3 * (alpha - 1.0) * rho ** (3.0 * alpha - 4.0)
    return value, infLap


# ******************************************************************************
def nondegeneracyThreshold(lam: float, gamma: float) -> float:
    """Supremum of the admissible coefficients ``c`` in the nondegeneracy barrier"""
    return tau(lam, gamma)


def isStrictSubsolution(c: float, lam: float, gamma: float) -> bool:
    """True iff ``Δ∞ψ < λψ^γ`` away from the center, i.e. ``0 < c < τ(λ,γ)``"""
    return 0.0 < c < nondegeneracyThreshold(lam, gamma)


# ******************************************************************************
def barrierPhi(lamB: float, d: float, X: Point) -> float:
    """Gaussian annulus barrier, continuous with support in ``B_d``.

    Constant ``e^{-λ(d/2)²} - κ₀`` on ``B_{d/2}``, ``e^{-λ|X|²} - κ₀`` on the
    annulus and 0 outside, with ``κ₀ = e^{-λd²}``.
    """
    if not (d > 0 and lamB > 0):
        raise InvalidParams(f'Need d > 0 and lambda > 0, got d={d!r}, lambda={lamB!r}')
    kappa0 = math.exp(-lamB * d * d)
    rho = math.hypot(X[0], X[1])
    if rho > d:
        return 0.0
    if rho <= 0.5 * d:
        return math.exp(-lamB * 0.25 * d * d) - kappa0
    return math.exp(-lamB * rho * rho) - kappa0


# ******************************************************************************
