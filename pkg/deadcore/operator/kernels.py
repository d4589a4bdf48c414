# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Just-in-time compiled kernels of the monotone min/max stencil.

The discrete infinity Laplacian at node ``(i, j)`` compares the largest rise
and the largest drop over the eight neighbours ``y``, the axis neighbours at
spacing ``d = h`` and the diagonal ones at ``d = √2·h``. With
``ψ_y(δ) = δ³/(3d_y⁴)``

.. math::

    F(t) = \\max_y \\psi_y(u_y - t) - \\max_y \\psi_y(t - u_y)

For a direction ``e`` of the stencil and opposite neighbours ``u(x ± de)``
the two maxima give ``(∂_e u)² ∂_ee u + O(d²)``. ``F`` is continuous,
strictly decreasing in ``t`` and nondecreasing in every neighbour value, and
it vanishes on linear data. Between the stencil lines it differentiates along
the selected stencil direction instead of the gradient. For an increasing
convex radial profile ``F ≥ κ·Δ∞u`` with ``κ =`` :py:data:`MinDirectionalFactor`,
and ``F ≤ Δ∞u`` where ``u'' ≥ u'/ρ``, both up to ``O(h²)``.

All kernels take nodal arrays shaped ``(nx, ny)``; ``lam`` is the nodal
Thiele modulus and ``fixed`` flags Dirichlet nodes.
"""
# ******************************************************************************
import math

import numba as nb
import numpy as np

# ******************************************************************************
_numba_setting = {'nogil': True, 'fastmath': False, 'cache': True}

Sqrt2: float = math.sqrt(2.0)

StatusOk: int = 0
StatusBracketFailure: int = 1

# axes first, then diagonals
OffsetI = np.array([1, -1, 0, 0, 1, -1, 1, -1], dtype=np.int64)
OffsetJ = np.array([0, 0, 1, -1, 1, -1, -1, 1], dtype=np.int64)
Spacing = np.array([1.0, 1.0, 1.0, 1.0, Sqrt2, Sqrt2, Sqrt2, Sqrt2])
"""Neighbour distance in units of ``h``."""
Weight = Spacing ** -4

SwitchAngle: float = math.atan(2.0 ** (2.0 / 3.0) - 1.0)
"""Angle between gradient and axis beyond which the diagonal neighbours are steepest."""
MinDirectionalFactor: float = math.cos(SwitchAngle) ** 4
"""Lower bound of ``F/Δ∞u`` for increasing radial profiles, about 0.553."""


# ******************************************************************************
@nb.njit(**_numba_setting)
def neighbourExtremes(u, i, j):
    """Max and min over the 8 neighbours"""
    M = -np.inf
    m = np.inf
    for k in range(8):
        v = u[i + OffsetI[k], j + OffsetJ[k]]
        if v > M:
            M = v
        if v < m:
            m = v
    return M, m


# ******************************************************************************
@nb.njit(**_numba_setting)
def steepestNeighbours(u, i, j, t):
    """Stencil indices ``(kUp, kDown)`` maximizing ``ψ(u_y - t)`` and ``ψ(t - u_y)``

    Ties go to the first index in :py:data:`OffsetI` order.
    """
    up = -np.inf
    down = -np.inf
    kUp = 0
    kDown = 0
    for k in range(8):
        delta = u[i + OffsetI[k], j + OffsetJ[k]] - t
        rise = Weight[k] * delta * delta * delta
        if rise > up:
            up = rise
            kUp = k
        if -rise > down:
            down = -rise
            kDown = k
    return kUp, kDown


# ******************************************************************************
@nb.njit(**_numba_setting)
def minmaxOperator(u, i, j, h, t):
    """``F(t)`` at node ``(i, j)`` with the neighbours of ``u``"""
    kUp, kDown = steepestNeighbours(u, i, j, t)
    p = u[i + OffsetI[kUp], j + OffsetJ[kUp]] - t
    q = t - u[i + OffsetI[kDown], j + OffsetJ[kDown]]
    return (Weight[kUp] * p * p * p - Weight[kDown] * q * q * q) / (3.0 * h ** 4)


@nb.njit(**_numba_setting)
def minmaxOperatorSlope(u, i, j, h, t):
    """``dF/dt`` taken at the current maximizers"""
    kUp, kDown = steepestNeighbours(u, i, j, t)
    p = u[i + OffsetI[kUp], j + OffsetJ[kUp]] - t
    q = t - u[i + OffsetI[kDown], j + OffsetJ[kDown]]
    return -(Weight[kUp] * p * p + Weight[kDown] * q * q) / h ** 4


# ******************************************************************************
@nb.njit(**_numba_setting)
def sourceTerm(lam, gamma, t):
    """``λ(t⁺)^γ``; for ``γ = 0`` the indicator ``λ·[t > 0]``"""
    if t <= 0.0:
        return 0.0
    if gamma == 0.0:
        return lam
    return lam * t ** gamma


@nb.njit(**_numba_setting)
def sourceSlope(lam, gamma, t):
    if t <= 0.0 or gamma == 0.0:
        return 0.0
    return lam * gamma * t ** (gamma - 1.0)


# ******************************************************************************
@nb.njit(**_numba_setting)
def solveNode(u, i, j, lam, gamma, h, tol, maxIter):
    """Root of ``F(t) - λ(t⁺)^γ`` at node ``(i, j)``.

    The residual is decreasing in ``t``, nonnegative at ``min(m, 0)`` (at
    ``m`` when ``λ = 0``) and nonpositive at ``M``, ``M`` and ``m`` being the
    neighbour extremes. Newton steps from the current value are kept inside
    the shrinking bracket and replaced by bisection when they leave it.

    Returns:
        ``(t, status, lowResidual, highResidual)``; on a bracket failure ``t``
        is the unchanged value.
    """
    M, m = neighbourExtremes(u, i, j)
    a = min(m, 0.0) if lam > 0.0 else m
    b = M
    ra = minmaxOperator(u, i, j, h, a) - sourceTerm(lam, gamma, a)
    rb = minmaxOperator(u, i, j, h, b) - sourceTerm(lam, gamma, b)
    if not (ra >= 0.0 and rb <= 0.0):
        return u[i, j], StatusBracketFailure, ra, rb
    if ra == 0.0:
        return a, StatusOk, ra, rb
    if rb == 0.0:
        return b, StatusOk, ra, rb

    t = u[i, j]
    if not (a < t < b):
        t = 0.5 * (a + b)
    for _ in range(maxIter):
        r = minmaxOperator(u, i, j, h, t) - sourceTerm(lam, gamma, t)
        if r == 0.0:
            return t, StatusOk, ra, rb
        if r > 0.0:
            a = t
        else:
            b = t

        slope = minmaxOperatorSlope(u, i, j, h, t) - sourceSlope(lam, gamma, t)
        tn = 0.5 * (a + b)
        if slope < 0.0:
            step = t - r / slope
            if a < step < b:
                tn = step
        if abs(tn - t) <= tol or b - a <= tol:
            return tn, StatusOk, ra, rb
        t = tn
    return t, StatusOk, ra, rb


# ******************************************************************************
@nb.njit(parallel=True, **_numba_setting)
def sweepColour(u, fixed, lam, gamma, h, tol, maxIter, ci, cj, rowDelta, rowFailure):
    """Update in place every free node with ``i % 2 == ci`` and ``j % 2 == cj``.

    Nodes of one colour never read each other through the 8-point stencil, so
    rows run in parallel. ``rowDelta[i]`` is raised to the largest change on
    row ``i`` and ``rowFailure[i]`` set to the column of a failing node.
    """
    nx, ny = u.shape
    i0 = 2 if ci == 0 else 1
    j0 = 2 if cj == 0 else 1
    rows = (nx - 2 - i0) // 2 + 1 if i0 <= nx - 2 else 0
    for k in nb.prange(rows):
        i = i0 + 2 * k
        delta = 0.0
        for j in range(j0, ny - 1, 2):
            if fixed[i, j]:
                continue
            t, status, _, _ = solveNode(u, i, j, lam[i, j], gamma, h, tol, maxIter)
            if status != StatusOk:
                rowFailure[i] = j
                break
            change = abs(t - u[i, j])
            if change > delta:
                delta = change
            u[i, j] = t
        if delta > rowDelta[i]:
            rowDelta[i] = delta


# ******************************************************************************
@nb.njit(parallel=True, **_numba_setting)
def residualKernel(u, fixed, lam, gamma, h, out):
    """``F(u) - λ(u⁺)^γ`` at free interior nodes, 0 elsewhere"""
    nx, ny = u.shape
    for i in nb.prange(nx):
        for j in range(ny):
            if i == 0 or j == 0 or i == nx - 1 or j == ny - 1 or fixed[i, j]:
                out[i, j] = 0.0
                continue
            t = u[i, j]
            out[i, j] = minmaxOperator(u, i, j, h, t) - sourceTerm(lam[i, j], gamma, t)


# ******************************************************************************
@nb.njit(parallel=True, **_numba_setting)
def minmaxOperatorKernel(u, h, out):
    """Min/max stencil infinity Laplacian at interior nodes, 0 on the edge"""
    nx, ny = u.shape
    for i in nb.prange(nx):
        for j in range(ny):
            if i == 0 or j == 0 or i == nx - 1 or j == ny - 1:
                out[i, j] = 0.0
                continue
            out[i, j] = minmaxOperator(u, i, j, h, u[i, j])


# ******************************************************************************
