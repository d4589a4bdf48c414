# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Problem coefficients and scheme/tolerance configuration."""
# ******************************************************************************
from typing import Union

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, Field, PositiveFloat, PositiveInt, model_validator
from strenum import StrEnum

from deadcore.core.field import ScalarField
from deadcore.core.grid import Grid
from deadcore.exceptions import GridMismatch

# ******************************************************************************
CriticalGammaValue: float = 3.0
"""Exponent at which the absorption stops producing dead cores."""
DefaultTolUpdate: float = 1e-10
DefaultTolResidualFactor: float = 1e-8
DefaultMaxSweepsFactor: int = 100


# ******************************************************************************
class Scheme(StrEnum):
    """Discretizations of the infinity Laplacian"""
    MinMaxStencil = 'minmax'
    DirectionInterp = 'interp'


# ******************************************************************************
class Params(BaseModel):
    """Coefficients of ``Δ∞u = λ(u⁺)^γ`` and the solver configuration.

    ``lam`` is either a constant or a nodal :py:class:`ScalarField` (variable
    Thiele modulus). ``tolResidual`` and ``maxSweeps`` left as ``None`` are
    resolved per problem: ``tolResidual = 1e-8·max(1, ‖φ‖∞^γ·λmax)`` and
    ``maxSweeps = 100·max(nx, ny)``.
    """
    gamma: float = Field(ge=0.0, le=CriticalGammaValue)
    lam: Union[float, ScalarField] = Field(default=1.0, alias='lambda')
    scheme: Scheme = Scheme.MinMaxStencil
    tolUpdate: PositiveFloat = DefaultTolUpdate
    tolResidual: PositiveFloat | None = None
    maxSweeps: PositiveInt | None = None

    class Config:
        use_enum_values = True
        arbitrary_types_allowed = True
        populate_by_name = True
        frozen = True

    # **************************************************************************
    @model_validator(mode='after')
    def _nonnegativeLambda(self) -> 'Params':
        if isinstance(self.lam, ScalarField):
            if self.lam.min() < 0:
                raise ValueError(f'lambda field has negative values (min {self.lam.min():g})')
        elif not (np.isfinite(self.lam) and self.lam >= 0):
            raise ValueError(f'lambda must be a finite nonnegative number, got {self.lam!r}')
        return self

    # **************************************************************************
    @property
    def isCritical(self) -> bool:
        return self.gamma >= CriticalGammaValue

    @property
    def lambdaMax(self) -> float:
        if isinstance(self.lam, ScalarField):
            return self.lam.max()
        return float(self.lam)

    # **************************************************************************
    def lambdaArray(self, grid: Grid) -> NDArray[np.float64]:
        """Nodal Thiele modulus on ``grid`` (a constant is broadcast)"""
        if isinstance(self.lam, ScalarField):
            if not self.lam.grid.sameAs(grid):
                raise GridMismatch('lambda field lives on a different grid')
            return np.array(self.lam.values, dtype=np.float64)
        return np.full(grid.shape, float(self.lam))

    # **************************************************************************
    def residualTolerance(self, dataSup: float) -> float:
        """Residual stopping threshold for data of sup norm ``dataSup``"""
        if self.tolResidual is not None:
            return float(self.tolResidual)
        return DefaultTolResidualFactor * max(1.0, dataSup ** self.gamma * self.lambdaMax)

    # **************************************************************************
    def sweepLimit(self, grid: Grid) -> int:
        if self.maxSweeps is not None:
            return int(self.maxSweeps)
        return DefaultMaxSweepsFactor * max(grid.nx, grid.ny)

    # **************************************************************************
    def replaced(self, **changes) -> 'Params':
        """Copy with some fields changed (re-validated)"""
        data = {'gamma': self.gamma, 'lam': self.lam, 'scheme': self.scheme,
                'tolUpdate': self.tolUpdate, 'tolResidual': self.tolResidual,
                'maxSweeps': self.maxSweeps}
        data.update(changes)
        return Params(**data)


# ******************************************************************************
