# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Dirichlet problems and solve reports.

A :py:class:`Problem` couples a grid, nonnegative boundary data and the
coefficients. Dirichlet nodes are the rectangle edge plus an optional
``fixedMask``; ball domains fix every node outside the ball so that the
curved boundary needs no special stencil.
"""
# ******************************************************************************
from typing import Callable, Optional

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, Field, model_validator

from deadcore.core.field import ScalarField, sampleFunction
from deadcore.core.grid import BallSpec, Grid, Point, makeGrid
from deadcore.core.params import Params
from deadcore.exceptions import GridMismatch, InvalidParams


# ******************************************************************************
def _aronsson(x, y):
    return np.abs(x) ** (4.0 / 3.0) - np.abs(y) ** (4.0 / 3.0)


def _cone(x, y):
    return np.hypot(x, y)


def _linear(x, y):
    return x + y


BoundaryExpressions: dict[str, Callable] = {
    'aronsson': _aronsson,
    'cone': _cone,
    'linear': _linear,
}
"""Named boundary data usable from problem files (``"expression <id>"``)."""


# ******************************************************************************
class Problem(BaseModel):
    """Dirichlet problem ``Δ∞u = λ(u⁺)^γ`` in the free nodes, ``u = φ`` on the fixed ones.

    Attributes:
        grid: the lattice.
        boundaryData: ``φ``; only its values on Dirichlet nodes are used.
        params: coefficients and tolerances.
        fixedMask: extra Dirichlet nodes besides the rectangle edge.
    """
    grid: Grid
    boundaryData: ScalarField
    params: Params
    fixedMask: Optional[np.ndarray] = Field(default=None, repr=False)

    class Config:
        arbitrary_types_allowed = True
        frozen = True

    # **************************************************************************
    @model_validator(mode='after')
    def _consistent(self) -> 'Problem':
        if not self.boundaryData.grid.sameAs(self.grid):
            raise GridMismatch('boundary data lives on a different grid')
        if self.fixedMask is not None:
            if self.fixedMask.shape != self.grid.shape:
                raise GridMismatch(f'fixed mask {self.fixedMask.shape} does not fit grid {self.grid.shape}')
            if self.fixedMask[~self.grid.boundaryMask()].all():
                raise InvalidParams('Every node is fixed; nothing to solve')
        data = self.boundaryData.values[self.dirichletMask]
        if data.min() < 0:
            raise ValueError(f'boundary data must be nonnegative (min {data.min():g})')
        return self

    # **************************************************************************
    @property
    def dirichletMask(self) -> NDArray[np.bool_]:
        """All nodes held at the data: rectangle edge plus ``fixedMask``"""
        mask = self.grid.boundaryMask()
        if self.fixedMask is not None:
            mask |= self.fixedMask
        return mask

    @property
    def freeMask(self) -> NDArray[np.bool_]:
        return ~self.dirichletMask

    # **************************************************************************
    def dataSup(self) -> float:
        """``‖φ‖∞`` over the Dirichlet nodes"""
        return float(self.boundaryData.values[self.dirichletMask].max())

    # **************************************************************************
    def withParams(self, params: Params) -> 'Problem':
        return Problem(grid=self.grid, boundaryData=self.boundaryData, params=params,
                       fixedMask=self.fixedMask)

    def withData(self, data: ScalarField) -> 'Problem':
        return Problem(grid=self.grid, boundaryData=data, params=self.params, fixedMask=self.fixedMask)

    # **************************************************************************
    @classmethod
    def constant(cls, grid: Grid, c: float, params: Params,
                 fixedMask: NDArray[np.bool_] | None = None) -> 'Problem':
        """Constant data ``φ ≡ c``"""
        return cls(grid=grid, boundaryData=ScalarField.constant(grid, c), params=params, fixedMask=fixedMask)

    # **************************************************************************
    @classmethod
    def fromFunction(cls, grid: Grid, f: Callable, params: Params,
                     fixedMask: NDArray[np.bool_] | None = None) -> 'Problem':
        return cls(grid=grid, boundaryData=sampleFunction(grid, f), params=params, fixedMask=fixedMask)

    # **************************************************************************
    @classmethod
    def onBall(cls, grid: Grid, ball: BallSpec, data: ScalarField | float, params: Params) -> 'Problem':
        """Ball domain: every node outside ``ball`` is a Dirichlet node"""
        if not isinstance(data, ScalarField):
            data = ScalarField.constant(grid, float(data))
        return cls(grid=grid, boundaryData=data, params=params, fixedMask=~ball.mask(grid))


# ******************************************************************************
def ballGrid(center: Point, R: float, resolution: int, margin: float = 0.0) -> Grid:
    """Square grid covering ``B_R(center)`` with ``margin`` extra on each side"""
    half = R + margin
    return makeGrid((center[0] - half, center[1] - half), (2.0 * half, 2.0 * half), (resolution, resolution))


# ******************************************************************************
def ballProblem(R: float, c: float | Callable, params: Params, resolution: int,
                center: Point = (0.0, 0.0)) -> Problem:
    """Problem on ``B_R(center)`` with constant data ``c`` or data sampled from ``c(x, y)``"""
    grid = ballGrid(center, R, resolution)
    data = sampleFunction(grid, c) if callable(c) else ScalarField.constant(grid, c)
    return Problem.onBall(grid, BallSpec(center=center, radius=R), data, params)


# ******************************************************************************
class SolveReport(BaseModel):
    """Outcome of one solve.

    ``finalMaxUpdate`` is the largest nodal change of the last sweep and
    ``errorEstimate`` that change divided by one minus the observed
    contraction rate. ``bracketViolations`` counts nodes outside
    ``[lower - tol, upper + tol]``. ``schemeResidual`` is reported when the
    configured scheme differs from the one swept with.
    """
    sweeps: int
    finalMaxResidual: float = Field(serialization_alias='final_max_residual')
    finalMaxUpdate: float = Field(serialization_alias='final_max_update')
    errorEstimate: float = Field(serialization_alias='error_estimate')
    plateauFraction: float = Field(ge=0.0, le=1.0, serialization_alias='plateau_fraction')
    converged: bool
    bracketViolations: int = Field(default=0, serialization_alias='bracket_violations')
    schemeResidual: Optional[float] = Field(default=None, serialization_alias='scheme_residual')


# ******************************************************************************
