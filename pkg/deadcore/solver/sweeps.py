# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Nonlinear Gauss-Seidel relaxation in four-colour order.

Nodes are coloured by the parities of ``i`` and ``j``. With the 8-point
stencil no two nodes of one colour are neighbours, so every colour is updated
in parallel and the result does not depend on the number of threads.
"""
# ******************************************************************************
import numpy as np
from numpy.typing import ArrayLike, NDArray

from deadcore.exceptions import BracketFailure
from deadcore.operator import kernels

# ******************************************************************************
ColourOrder: tuple[tuple[int, int], ...] = ((0, 0), (1, 0), (0, 1), (1, 1))
MaxNodeIterations: int = 200
NodeToleranceFactor: float = 0.1
"""Scalar root tolerance relative to the sweep update tolerance."""


# ******************************************************************************
class Relaxation(object):
    """Working state of one discrete problem.

    The value array is private to the relaxation; :py:meth:`sweep` changes it
    in place and :py:attr:`values` hands out a copy.

    Args:
        values: initial iterate, Dirichlet nodes already at their data.
        fixed: Dirichlet flags (rectangle edge included).
        lam: nodal Thiele modulus.
        gamma: absorption exponent.
        h: grid spacing.
        tolUpdate: sweep update tolerance; node solves use a tenth of it.
    """

    # **************************************************************************
    def __init__(self, values: ArrayLike, fixed: NDArray[np.bool_], lam: NDArray[np.float64],
                 gamma: float, h: float, tolUpdate: float):
        self._u = np.array(values, dtype=np.float64, order='C')
        assert self._u.ndim == 2 and self._u.shape == fixed.shape == lam.shape
        self._fixed = np.ascontiguousarray(fixed, dtype=np.bool_)
        self._lam = np.ascontiguousarray(lam, dtype=np.float64)
        self._gamma = float(gamma)
        self._h = float(h)
        self._nodeTol = NodeToleranceFactor * float(tolUpdate)

        nx, ny = self._u.shape
        self._rowDelta = np.zeros(nx, dtype=np.float64)
        self._rowFailure = np.full(nx, -1, dtype=np.int64)
        self._residual = np.zeros((nx, ny), dtype=np.float64)

    # **************************************************************************
    @property
    def values(self) -> NDArray[np.float64]:
        return self._u.copy()

    @property
    def fixed(self) -> NDArray[np.bool_]:
        return self._fixed

    # **************************************************************************
    def sweep(self) -> float:
        """One pass over the four colours; returns the largest nodal change

        Raises:
            BracketFailure: if a node equation has no sign change.
        """
        self._rowDelta[:] = 0.0
        for ci, cj in ColourOrder:
            self._rowFailure[:] = -1
            kernels.sweepColour(self._u, self._fixed, self._lam, self._gamma, self._h, self._nodeTol,
                                MaxNodeIterations, ci, cj, self._rowDelta, self._rowFailure)
            failed = np.flatnonzero(self._rowFailure >= 0)
            if failed.size:
                i = int(failed[0])
                j = int(self._rowFailure[i])
                _, _, low, high = kernels.solveNode(self._u, i, j, self._lam[i, j], self._gamma, self._h,
                                                    self._nodeTol, MaxNodeIterations)
                raise BracketFailure((i, j), float(low), float(high))
        return float(self._rowDelta.max())

    # **************************************************************************
    def residual(self) -> NDArray[np.float64]:
        """Min/max stencil residual at the free nodes (0 at fixed ones)"""
        kernels.residualKernel(self._u, self._fixed, self._lam, self._gamma, self._h, self._residual)
        return self._residual.copy()

    def maxResidual(self) -> float:
        kernels.residualKernel(self._u, self._fixed, self._lam, self._gamma, self._h, self._residual)
        return float(np.abs(self._residual).max())


# ******************************************************************************
