# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Closed-form radial dead-core solutions.

For constant ``λ > 0`` and ``0 ≤ γ < 3`` the profile ``h(s) = τ s^α`` with

.. math::

    α = \\frac{4}{3-γ}, \\qquad
    τ(λ,γ) = \\left(\\frac{λ(3-γ)^4}{64(1+γ)}\\right)^{1/(3-γ)}

solves ``h''(h')² = λh^γ``. Shifting it radially gives, for the ball
``B_R(X₀)`` with constant data ``c``, the solution
``u(X) = τ(|X-X₀| - R + T)₊^α`` with ``T = (c/τ)^{(3-γ)/4}``; it vanishes on
the core ``B_{R-T}(X₀)`` whenever ``R > T``.
"""
# ******************************************************************************
import math
from typing import overload

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel

from deadcore.core.grid import Point
from deadcore.exceptions import CriticalGamma, InvalidParams


# ******************************************************************************
def _checkGamma(gamma: float) -> None:
    if not (gamma >= 0):
        raise InvalidParams(f'gamma must be nonnegative, got {gamma!r}')
    if gamma >= 3:
        raise CriticalGamma(f'gamma = {gamma!r} is critical; the radial family needs gamma < 3')


# ******************************************************************************
def tau(lam: float, gamma: float) -> float:
    """Coefficient of the radial profile ``τ s^{4/(3-γ)}``.

    Raises:
        CriticalGamma: for ``gamma >= 3``.
        InvalidParams: for ``lam <= 0``.
    """
    _checkGamma(gamma)
    if not (lam > 0):
        raise InvalidParams(f'lambda must be positive, got {lam!r}')
    return (lam * (3.0 - gamma) ** 4 / (64.0 * (1.0 + gamma))) ** (1.0 / (3.0 - gamma))


# ******************************************************************************
def growthExponent(gamma: float) -> float:
    """Sharp growth exponent ``4/(3-γ)`` of solutions away from the free boundary"""
    _checkGamma(gamma)
    return 4.0 / (3.0 - gamma)


# ******************************************************************************
class RadialSolution(BaseModel):
    """Radial dead-core solution on ``B_R(center)`` with boundary level ``c``.

    ``rCore`` is clamped at 0; when ``R <= T`` there is no core and the same
    positive-part formula is used on the whole ball.
    """
    center: Point
    R: float
    c: float
    lam: float
    gamma: float
    tau: float
    T: float
    rCore: float
    hasDeadCore: bool

    class Config:
        frozen = True

    # **************************************************************************
    @property
    def alpha(self) -> float:
        return 4.0 / (3.0 - self.gamma)

    # **************************************************************************
    def profile(self, s: ArrayLike) -> NDArray[np.float64] | float:
        """One dimensional profile ``τ s₊^α``"""
        sp = np.maximum(np.asarray(s, dtype=np.float64), 0.0)
        value = self.tau * sp ** self.alpha
        return float(value) if value.ndim == 0 else value


# ******************************************************************************
def makeRadial(center: Point, R: float, c: float, lam: float, gamma: float) -> RadialSolution:
    """Build the radial solution and its derived quantities.

    Raises:
        CriticalGamma: for ``gamma >= 3``.
        InvalidParams: unless ``R > 0`` and ``c > 0``.
    """
    if not (R > 0 and c > 0):
        raise InvalidParams(f'R and c must be positive, got R={R!r}, c={c!r}')
    t = tau(lam, gamma)
    T = (c / t) ** ((3.0 - gamma) / 4.0)
    return RadialSolution(center=(float(center[0]), float(center[1])), R=float(R), c=float(c),
                          lam=float(lam), gamma=float(gamma), tau=t, T=T,
                          rCore=max(R - T, 0.0), hasDeadCore=bool(R > T))


# ******************************************************************************
@overload
def evalRadial(sol: RadialSolution, X: Point) -> float: ...


@overload
def evalRadial(sol: RadialSolution, X: tuple[NDArray, NDArray]) -> NDArray[np.float64]: ...


def evalRadial(sol, X):
    """Evaluate ``τ(|X-X₀| - R + T)₊^α``; exactly 0 on the closed core ball.

    ``X`` is a point or a pair of coordinate arrays.
    """
    x, y = X
    rho = np.hypot(np.asarray(x, dtype=np.float64) - sol.center[0],
                   np.asarray(y, dtype=np.float64) - sol.center[1])
    s = rho - sol.R + sol.T
    if sol.hasDeadCore:
        s = np.where(rho <= sol.rCore, 0.0, s)
    return sol.profile(s)


# ******************************************************************************
def odeResidual(lam: float, gamma: float, s: float) -> float:
    """``h''(h')² - λh^γ`` for ``h = τ s^α`` with exact derivatives"""
    assert s > 0
    t = tau(lam, gamma)
    alpha = growthExponent(gamma)
    h = t * s ** alpha
    dh = t * alpha * s ** (alpha - 1.0)
    d2h = t * alpha * (alpha - 1.0) * s ** (alpha - 2.0)
    return d2h * dh * dh - lam * h ** gamma


def relativeOdeResidual(lam: float, gamma: float, s: float) -> float:
    """:py:func:`odeResidual` relative to the source term ``λh^γ``"""
    h = tau(lam, gamma) * s ** growthExponent(gamma)
    return abs(odeResidual(lam, gamma, s)) / (lam * h ** gamma)


# ******************************************************************************
def plateauCriterion(supR: float, R: float, lam: float, gamma: float) -> bool:
    """True iff ``sup_{B_R} u < τ R^α`` (strict), the plateau-point test.

    Equality is attained by :py:func:`equalityProfile`, which has no plateau,
    so the inequality cannot be relaxed.
    """
    if not (R > 0 and math.isfinite(supR)):
        raise InvalidParams(f'Need finite sup and R > 0, got sup={supR!r}, R={R!r}')
    return supR < tau(lam, gamma) * R ** growthExponent(gamma)


# ******************************************************************************
def equalityProfile(lam: float, gamma: float, X: Point, X0: Point = (0.0, 0.0)) -> float:
    """Whole-space solution ``τ|X-X₀|^α`` attaining equality in the plateau criterion"""
    return tau(lam, gamma) * math.dist(X, X0) ** growthExponent(gamma)


# ******************************************************************************
def liouvilleEnvelope(theta: float, R: float, lam: float, gamma: float, X: Point) -> float:
    """Upper envelope ``τ(|X| - (1-θ^{(3-γ)/4})R)₊^α`` for data ``θτR^α`` on ``∂B_R``"""
    if not (0 < theta < 1):
        raise InvalidParams(f'theta must lie in (0, 1), got {theta!r}')
    shift = (1.0 - theta ** ((3.0 - gamma) / 4.0)) * R
    s = max(math.hypot(X[0], X[1]) - shift, 0.0)
    return tau(lam, gamma) * s ** growthExponent(gamma)


def liouvilleCoreRadius(theta: float, R: float, gamma: float) -> float:
    """Radius ``(1-θ^{(3-γ)/4})R`` of the ball the Liouville envelope vanishes on"""
    return (1.0 - theta ** ((3.0 - gamma) / 4.0)) * R


# ******************************************************************************
