# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Uniform rectangular lattice with square cells.

Node ``(i, j)`` sits at ``origin + (i*h, j*h)``; ``i`` runs along x and ``j``
along y, and nodal arrays are shaped ``(nx, ny)`` so that ``values[i, j]`` is
the value at node ``(i, j)``.
"""
# ******************************************************************************
import math

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, PositiveFloat, field_validator

from deadcore.exceptions import EmptyBall, InvalidParams, NonSquareCells, TooCoarse

# ******************************************************************************
SquareCellTolerance: float = 1e-12
"""Relative tolerance on the x/y spacing mismatch."""
MinimumNodes: int = 3
"""Smallest node count per axis (one interior node)."""

Point = tuple[float, float]
Node = tuple[int, int]


# ******************************************************************************
class Grid(BaseModel):
    """Uniform lattice over the rectangle ``origin + [0, extent]``"""
    origin: Point
    extent: Point
    nx: int
    ny: int
    h: float

    class Config:
        frozen = True

    # **************************************************************************
    @property
    def shape(self) -> tuple[int, int]:
        return self.nx, self.ny

    @property
    def nodeCount(self) -> int:
        return self.nx * self.ny

    @property
    def xs(self) -> NDArray[np.float64]:
        """Node x coordinates"""
        return self.origin[0] + self.h * np.arange(self.nx, dtype=np.float64)

    @property
    def ys(self) -> NDArray[np.float64]:
        """Node y coordinates"""
        return self.origin[1] + self.h * np.arange(self.ny, dtype=np.float64)

    # **************************************************************************
    def meshgrid(self) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """Coordinate arrays ``X, Y`` shaped like the nodal arrays"""
        return np.meshgrid(self.xs, self.ys, indexing='ij')

    # **************************************************************************
    def position(self, node: Node) -> Point:
        i, j = node
        return self.origin[0] + i * self.h, self.origin[1] + j * self.h

    # **************************************************************************
    def isBoundary(self, node: Node) -> bool:
        i, j = node
        return i == 0 or j == 0 or i == self.nx - 1 or j == self.ny - 1

    # **************************************************************************
    def boundaryMask(self) -> NDArray[np.bool_]:
        """Flags exactly the nodes on the rectangle edge"""
        mask = np.zeros(self.shape, dtype=np.bool_)
        mask[0, :] = mask[-1, :] = True
        mask[:, 0] = mask[:, -1] = True
        return mask

    # **************************************************************************
    def contains(self, point: Point) -> bool:
        """True if the point lies in the closed rectangle"""
        x, y = point
        eps = SquareCellTolerance * max(self.extent)
        return (self.origin[0] - eps <= x <= self.origin[0] + self.extent[0] + eps and
                self.origin[1] - eps <= y <= self.origin[1] + self.extent[1] + eps)

    # **************************************************************************
    def distanceToEdge(self, point: Point) -> float:
        """Distance from an interior point to the rectangle edge"""
        x, y = point
        return min(x - self.origin[0], self.origin[0] + self.extent[0] - x,
                   y - self.origin[1], self.origin[1] + self.extent[1] - y)

    # **************************************************************************
    def distances(self, point: Point) -> NDArray[np.float64]:
        """Euclidean distance of every node to ``point``"""
        X, Y = self.meshgrid()
        return np.hypot(X - point[0], Y - point[1])

    # **************************************************************************
    def nearestNode(self, point: Point) -> Node:
        i = int(round((point[0] - self.origin[0]) / self.h))
        j = int(round((point[1] - self.origin[1]) / self.h))
        return min(max(i, 0), self.nx - 1), min(max(j, 0), self.ny - 1)

    # **************************************************************************
    def sameAs(self, other: 'Grid') -> bool:
        """Node-for-node equality of two lattices"""
        return (self.nx == other.nx and self.ny == other.ny and
                math.isclose(self.h, other.h, rel_tol=SquareCellTolerance) and
                all(math.isclose(a, b, rel_tol=SquareCellTolerance, abs_tol=SquareCellTolerance * self.h)
                    for a, b in zip(self.origin, other.origin)))


# ******************************************************************************
def makeGrid(origin: Point, extent: Point, resolution: tuple[int, int]) -> Grid:
    """Build a lattice with square cells.

    Args:
        origin: lower left corner of the rectangle.
        extent: width and height of the rectangle.
        resolution: node counts ``(nx, ny)``, at least 3 each.

    Returns:
        Grid: the lattice, with spacing ``h = extent_x/(nx-1)``.

    Raises:
        TooCoarse: if any axis has fewer than 3 nodes.
        NonSquareCells: if the x and y spacings differ by more than 1e-12 relative.
        InvalidParams: for non-positive extents.
    """
    nx, ny = int(resolution[0]), int(resolution[1])
    if nx < MinimumNodes or ny < MinimumNodes:
        raise TooCoarse(f'At least {MinimumNodes} nodes per axis required, got {nx}x{ny}')

    ex, ey = float(extent[0]), float(extent[1])
    if not (ex > 0 and ey > 0 and math.isfinite(ex) and math.isfinite(ey)):
        raise InvalidParams(f'Extents must be positive, got {extent}')

    hx = ex / (nx - 1)
    hy = ey / (ny - 1)
    if abs(hx - hy) > SquareCellTolerance * max(hx, hy):
        raise NonSquareCells(f'Cell spacings differ: hx={hx!r}, hy={hy!r}')

    return Grid(origin=(float(origin[0]), float(origin[1])), extent=(ex, ey), nx=nx, ny=ny, h=hx)


# ******************************************************************************
class BallSpec(BaseModel):
    """Closed ball ``B_r(center)`` realised on a grid"""
    center: Point
    radius: PositiveFloat

    class Config:
        frozen = True

    # **************************************************************************
    @field_validator('center')
    @classmethod
    def _finiteCenter(cls, value: Point) -> Point:
        if not all(math.isfinite(c) for c in value):
            raise ValueError('ball center must be finite')
        return value

    # **************************************************************************
    def mask(self, grid: Grid) -> NDArray[np.bool_]:
        """Nodes with ``|node - center| <= radius``

        Raises:
            EmptyBall: if no node falls inside the ball.
        """
        inside = grid.distances(self.center) <= self.radius * (1 + SquareCellTolerance)
        if not inside.any():
            raise EmptyBall(f'No grid node within {self.radius} of {self.center}')
        return inside


# ******************************************************************************
