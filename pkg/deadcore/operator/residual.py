# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Pointwise residual of ``Δ∞u - λ(u⁺)^γ = 0``."""
# ******************************************************************************
import numpy as np
from numpy.typing import NDArray

from deadcore.core.field import ScalarField
from deadcore.core.params import Params
from deadcore.operator.stencil import DefaultInterpOrder, infinityLaplacianField


# ******************************************************************************
def absorption(values: NDArray[np.float64], lam: NDArray[np.float64], gamma: float) -> NDArray[np.float64]:
    """``λ(u⁺)^γ`` nodewise, with ``(u⁺)^0`` read as the indicator of ``u > 0``"""
    positive = np.maximum(values, 0.0)
    if gamma == 0.0:
        return np.where(values > 0.0, lam, 0.0)
    return lam * positive ** gamma


# ******************************************************************************
def residualField(field: ScalarField, params: Params, fixedMask: NDArray[np.bool_] | None = None,
                  order: int = DefaultInterpOrder) -> ScalarField:
    """Residual with the operator of ``params.scheme``.

    Zero on the rectangle edge and on the optional Dirichlet ``fixedMask``.

    Raises:
        GridMismatch: if a nodal ``lambda`` lives on another grid.
        OutOfHull: propagated from the DirectionInterp scheme.
    """
    lam = params.lambdaArray(field.grid)
    values = infinityLaplacianField(field, params.scheme, order) - absorption(field.values, lam, params.gamma)
    values[field.boundaryMask] = 0.0
    if fixedMask is not None:
        values[fixedMask] = 0.0
    return field.withValues(values)


# ******************************************************************************
