# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Growth of a solution away from its free boundary.

Near a free-boundary point ``X₀`` the sup of ``u`` over ``B_r(X₀)`` behaves
like ``C·r^{4/(3-γ)}``; the exponent is recovered by a log-log least squares
fit over dyadic radii. Sups are nodal maxima, biased low by ``O(h·Lip)``.
"""
# ******************************************************************************
import math

import numpy as np
from scipy import stats

from deadcore.analytic.radial import growthExponent
from deadcore.core.field import ScalarField
from deadcore.core.grid import Grid, Point, SquareCellTolerance
from deadcore.exceptions import EmptyBall, InsufficientData, ZeroSamples

# ******************************************************************************
MinimumSamples: int = 4
DefaultFlatnessMargin: float = 2.0
"""Slack on the dyadic decay bound for the discrete constants (calibration)."""
GrowthRadiusFraction: float = 0.25
SmallestBallCells: float = 4.0


# ******************************************************************************
def supOverBalls(field: ScalarField, X0: Point, radii: list[float]) -> list[tuple[float, float]]:
    """``(r, max of the nodal values with |node - X0| ≤ r)`` per radius

    Raises:
        EmptyBall: if a ball contains no node.
    """
    distances = field.grid.distances(X0)
    samples = []
    for r in radii:
        inside = distances <= r * (1.0 + SquareCellTolerance)
        if not inside.any():
            raise EmptyBall(f'No node within {r:g} of {X0}')
        samples.append((float(r), float(field.values[inside].max())))
    return samples


# ******************************************************************************
def fitGrowthExponent(samples: list[tuple[float, float]]) -> tuple[float, float]:
    """Least squares fit of ``log sup = α log r + log C``

    Returns:
        ``(alphaHat, CHat)``.

    Raises:
        InsufficientData: fewer than 4 positive samples with distinct radii.
        ZeroSamples: every sup vanishes (the anchor is deep inside the plateau).
    """
    if len(samples) < MinimumSamples:
        raise InsufficientData(f'At least {MinimumSamples} samples needed, got {len(samples)}')
    if all(s == 0 for _, s in samples):
        raise ZeroSamples('All sampled sups are zero; the anchor lies inside the plateau')

    positive = {r: s for r, s in samples if s > 0 and r > 0}
    if len(positive) < MinimumSamples:
        raise InsufficientData(f'Only {len(positive)} positive samples with distinct radii')

    radii = np.array(sorted(positive))
    sups = np.array([positive[r] for r in radii])
    fit = stats.linregress(np.log(radii), np.log(sups))
    return float(fit.slope), float(math.exp(fit.intercept))


# ******************************************************************************
def growthRadii(grid: Grid, X0: Point, fraction: float = GrowthRadiusFraction) -> list[float]:
    """Dyadic radii ``r₀2^{-k}``, ``r₀ = fraction·dist(X0, edge)``, smallest ball at least 4 cells"""
    r0 = fraction * grid.distanceToEdge(X0)
    radii = []
    r = r0
    while r >= SmallestBallCells * grid.h:
        radii.append(r)
        r *= 0.5
    return radii


# ******************************************************************************
def dyadicFlatnessCheck(field: ScalarField, X0: Point, gamma: float, kMax: int,
                        rho: float | None = None, margin: float = DefaultFlatnessMargin) -> list[bool]:
    """Dyadic decay flags ``sup_{B_{2^{-k}ρ}} ω ≤ margin·2^{-kα}``, ``k = 1..kMax``.

    ``ω`` is the field divided by its sup over ``B_ρ(X0)`` (``ρ`` defaults to
    the distance to the rectangle edge). The list stops early once the balls
    drop below one cell.
    """
    alpha = growthExponent(gamma)
    rho = field.grid.distanceToEdge(X0) if rho is None else rho
    (_, scale), = supOverBalls(field, X0, [rho])
    flags = []
    for k in range(1, kMax + 1):
        r = rho * 2.0 ** (-k)
        if r < field.grid.h:
            break
        try:
            (_, s), = supOverBalls(field, X0, [r])
        except EmptyBall:
            break
        omega = s / scale if scale > 0 else 0.0
        flags.append(bool(omega <= margin * 2.0 ** (-k * alpha)))
    return flags


# ******************************************************************************
