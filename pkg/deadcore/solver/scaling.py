# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Scaling maps ``v(Y) = K·u(ρY)``.

If ``Δ∞u = λ(u⁺)^γ`` then ``v`` solves the same equation with coefficient
``K^{3-γ}ρ⁴λ``. The rescaled lattice keeps the node count and divides origin,
extent and spacing by ``ρ``, so node ``(i, j)`` of both grids correspond and
the min/max stencil maps over exactly.
"""
# ******************************************************************************
import numpy as np

from deadcore.analytic.radial import growthExponent
from deadcore.core.field import ScalarField
from deadcore.core.grid import Grid, makeGrid
from deadcore.core.params import Params
from deadcore.exceptions import InvalidParams
from deadcore.solver.problem import Problem


# ******************************************************************************
def scaledCoefficient(K: float, rho: float, gamma: float) -> float:
    """Factor ``K^{3-γ}ρ⁴`` multiplying the Thiele modulus; independent of ``K`` at ``γ = 3``"""
    return K ** (3.0 - gamma) * rho ** 4


# ******************************************************************************
def _checkScales(K: float, rho: float) -> None:
    if not (K > 0 and rho > 0):
        raise InvalidParams(f'Scaling factors must be positive, got K={K!r}, rho={rho!r}')


def scaledGrid(grid: Grid, rho: float) -> Grid:
    """Lattice of the points ``X/ρ``"""
    return makeGrid((grid.origin[0] / rho, grid.origin[1] / rho),
                    (grid.extent[0] / rho, grid.extent[1] / rho), grid.shape)


# ******************************************************************************
def rescaleField(field: ScalarField, K: float, rho: float) -> ScalarField:
    """``K·u(ρY)`` on the lattice of ``X/ρ``"""
    _checkScales(K, rho)
    return ScalarField(scaledGrid(field.grid, rho), K * field.values)


# ******************************************************************************
def dyadicRescale(field: ScalarField, gamma: float) -> ScalarField:
    """``2^{4/(3-γ)}u(Y/2)``, the map under which the equation is invariant"""
    return rescaleField(field, 2.0 ** growthExponent(gamma), 0.5)


# ******************************************************************************
def rescaleProblem(problem: Problem, K: float, rho: float) -> Problem:
    """Problem solved by ``v(Y) = K·u(ρY)`` when ``u`` solves ``problem``"""
    _checkScales(K, rho)
    params = problem.params
    grid = scaledGrid(problem.grid, rho)
    factor = scaledCoefficient(K, rho, params.gamma)
    if isinstance(params.lam, ScalarField):
        lam = ScalarField(grid, factor * params.lam.values)
    else:
        lam = factor * float(params.lam)

    return Problem(grid=grid, boundaryData=ScalarField(grid, K * problem.boundaryData.values),
                   params=params.replaced(lam=lam),
                   fixedMask=None if problem.fixedMask is None else np.array(problem.fixedMask))


# ******************************************************************************
