# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Discrete gradient and infinity Laplacian of nodal fields.

Two discretizations of ``Δ∞u = ⟨D²u Du, Du⟩`` are provided:

* :py:attr:`Scheme.MinMaxStencil`, the monotone eight-direction form of
  :py:mod:`deadcore.operator.kernels` (used by the solver);
* :py:attr:`Scheme.DirectionInterp`, ``|g|²·(I(X+hξ) + I(X-hξ) - 2u)/h²``
  along the unit central-difference gradient ``ξ``, with ``I`` a spline
  interpolant of the nodal values. It is the accuracy reference. The
  spline is fitted on the values extended by odd reflection through the edge,
  so linear data are reproduced up to the rectangle boundary.
"""
# ******************************************************************************
import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel
from scipy import ndimage

from deadcore.core.field import ScalarField
from deadcore.core.grid import Node
from deadcore.core.params import Scheme
from deadcore.exceptions import BoundaryNode, OutOfHull
from deadcore.operator import kernels

# ******************************************************************************
DefaultInterpOrder: int = 3
"""Spline order of the off-grid samples; 1 gives bilinear interpolation."""
SplineMode: str = 'mirror'
SplinePadding: int = 24
"""Nodes of odd reflection added on every side before the spline fit."""


# ******************************************************************************
class StencilValue(BaseModel):
    """Local stencil quantities at one interior node.

    ``secondDiffAlongGrad`` is the normalized second difference
    ``2((u⁺ - u)/d⁺ - (u - u⁻)/d⁻)/(d⁺ + d⁻)`` between the steepest rising
    neighbour ``u⁺`` and the steepest falling one ``u⁻``, at distances
    ``upSpacing`` and ``downSpacing``.
    """
    maxNeighbor: float
    minNeighbor: float
    gradEstimate: tuple[float, float]
    secondDiffAlongGrad: float
    upSpacing: float
    downSpacing: float

    class Config:
        frozen = True


# ******************************************************************************
def _checkInterior(field: ScalarField, node: Node) -> None:
    i, j = node
    grid = field.grid
    assert 0 <= i < grid.nx and 0 <= j < grid.ny, f'Node {node} outside the {grid.nx}x{grid.ny} grid'
    if grid.isBoundary(node):
        raise BoundaryNode(f'Node {node} lies on the grid boundary')


# ******************************************************************************
def gradient(field: ScalarField, node: Node) -> tuple[float, float]:
    """Central difference gradient at an interior node

    Raises:
        BoundaryNode: for nodes on the rectangle edge.
    """
    _checkInterior(field, node)
    i, j = node
    u, h = field.values, field.grid.h
    return (float(u[i + 1, j] - u[i - 1, j]) / (2.0 * h),
            float(u[i, j + 1] - u[i, j - 1]) / (2.0 * h))


# ******************************************************************************
def gradientField(field: ScalarField) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Central difference gradient components at every node (0 on the edge)"""
    u, h = field.values, field.grid.h
    gx = np.zeros_like(u)
    gy = np.zeros_like(u)
    gx[1:-1, 1:-1] = (u[2:, 1:-1] - u[:-2, 1:-1]) / (2.0 * h)
    gy[1:-1, 1:-1] = (u[1:-1, 2:] - u[1:-1, :-2]) / (2.0 * h)
    return gx, gy


# ******************************************************************************
def stencilValue(field: ScalarField, node: Node) -> StencilValue:
    _checkInterior(field, node)
    i, j = node
    u, h = field.values, field.grid.h
    M, m = kernels.neighbourExtremes(u, i, j)
    t = u[i, j]
    kUp, kDown = kernels.steepestNeighbours(u, i, j, t)
    up = u[i + kernels.OffsetI[kUp], j + kernels.OffsetJ[kUp]]
    down = u[i + kernels.OffsetI[kDown], j + kernels.OffsetJ[kDown]]
    dUp = float(kernels.Spacing[kUp]) * h
    dDown = float(kernels.Spacing[kDown]) * h
    second = 2.0 * ((up - t) / dUp - (t - down) / dDown) / (dUp + dDown)
    return StencilValue(maxNeighbor=float(M), minNeighbor=float(m),
                        gradEstimate=gradient(field, node),
                        secondDiffAlongGrad=float(second),
                        upSpacing=dUp, downSpacing=dDown)


# ******************************************************************************
def _gradientCutoff(h: float) -> float:
    return h * h


def _indexCoordinates(field: ScalarField, x: NDArray, y: NDArray) -> NDArray[np.float64]:
    """Index coordinates into the padded value array"""
    grid = field.grid
    return np.vstack([(np.ravel(x) - grid.origin[0]) / grid.h + SplinePadding,
                      (np.ravel(y) - grid.origin[1]) / grid.h + SplinePadding])


def _checkHull(field: ScalarField, x: NDArray, y: NDArray) -> None:
    grid = field.grid
    eps = 1e-9 * grid.h
    inside = ((x >= grid.origin[0] - eps) & (x <= grid.origin[0] + grid.extent[0] + eps) &
              (y >= grid.origin[1] - eps) & (y <= grid.origin[1] + grid.extent[1] + eps))
    if not np.all(inside):
        k = int(np.argmin(inside))
        raise OutOfHull(f'Sample point ({float(np.ravel(x)[k]):.6g}, {float(np.ravel(y)[k]):.6g}) '
                        f'lies outside the grid')


# ******************************************************************************
def _directionInterp(field: ScalarField, nodes: NDArray[np.int64], order: int) -> NDArray[np.float64]:
    """DirectionInterp values at the given interior nodes (``(k, 2)`` index array)"""
    grid = field.grid
    u, h = field.values, grid.h
    i, j = nodes[:, 0], nodes[:, 1]
    gx = (u[i + 1, j] - u[i - 1, j]) / (2.0 * h)
    gy = (u[i, j + 1] - u[i, j - 1]) / (2.0 * h)
    norm = np.hypot(gx, gy)
    active = norm > _gradientCutoff(h)

    result = np.zeros(i.shape, dtype=np.float64)
    if not active.any():
        return result

    xi = np.where(active, gx / np.where(active, norm, 1.0), 0.0)
    eta = np.where(active, gy / np.where(active, norm, 1.0), 0.0)
    x = grid.origin[0] + i * h
    y = grid.origin[1] + j * h
    xp, yp = (x + h * xi)[active], (y + h * eta)[active]
    xm, ym = (x - h * xi)[active], (y - h * eta)[active]
    _checkHull(field, xp, yp)
    _checkHull(field, xm, ym)

    padded = np.pad(u, SplinePadding, mode='reflect', reflect_type='odd')
    coeffs = ndimage.spline_filter(padded, order=order, mode=SplineMode) if order > 1 else padded
    plus = ndimage.map_coordinates(coeffs, _indexCoordinates(field, xp, yp), order=order,
                                   mode=SplineMode, prefilter=False)
    minus = ndimage.map_coordinates(coeffs, _indexCoordinates(field, xm, ym), order=order,
                                    mode=SplineMode, prefilter=False)
    center = u[i[active], j[active]]
    result[active] = norm[active] ** 2 * (plus + minus - 2.0 * center) / (h * h)
    return result


# ******************************************************************************
def infinityLaplacian(field: ScalarField, node: Node, scheme: Scheme | str = Scheme.MinMaxStencil,
                      order: int = DefaultInterpOrder) -> float:
    """Discrete ``Δ∞u`` at one interior node.

    Args:
        field: the nodal values.
        node: interior node ``(i, j)``.
        scheme: discretization, see :py:class:`~deadcore.core.params.Scheme`.
        order: spline order of the DirectionInterp samples.

    Raises:
        BoundaryNode: for nodes on the rectangle edge.
        OutOfHull: if a DirectionInterp sample leaves the rectangle.
    """
    _checkInterior(field, node)
    i, j = node
    if Scheme(scheme) == Scheme.MinMaxStencil:
        u = np.ascontiguousarray(field.values)
        return float(kernels.minmaxOperator(u, i, j, field.grid.h, u[i, j]))
    return float(_directionInterp(field, np.array([[i, j]], dtype=np.int64), order)[0])


# ******************************************************************************
def infinityLaplacianField(field: ScalarField, scheme: Scheme | str = Scheme.MinMaxStencil,
                           order: int = DefaultInterpOrder) -> NDArray[np.float64]:
    """Discrete ``Δ∞u`` at every interior node, 0 on the rectangle edge"""
    u = np.ascontiguousarray(field.values)
    out = np.zeros_like(u)
    if Scheme(scheme) == Scheme.MinMaxStencil:
        kernels.minmaxOperatorKernel(u, field.grid.h, out)
        return out

    interior = ~field.boundaryMask
    nodes = np.argwhere(interior).astype(np.int64)
    out[interior] = _directionInterp(field, nodes, order)
    return out


# ******************************************************************************
