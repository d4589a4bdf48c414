# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Plateau and free boundary of a nodal field.

The plateau is ``{u ≤ δ}``; its free boundary consists of the plateau nodes
having at least one 4-neighbour outside the plateau. Neighbours beyond the
rectangle edge do not count.
"""
# ******************************************************************************
import numpy as np
from numpy.typing import NDArray

from deadcore.core.field import ScalarField
from deadcore.core.grid import Grid, Node, Point
from deadcore.exceptions import BoundaryNode, EmptyBoundary, InvalidParams


# ******************************************************************************
class PlateauMask(object):
    """Plateau and free-boundary flags on a grid

    Attributes:
        grid (Grid): the lattice.
        plateau (numpy.ndarray): ``(nx, ny)`` flags of ``{u ≤ δ}``.
        freeBoundary (numpy.ndarray): plateau nodes next to the positive phase.
        delta (float): detection threshold.
    """

    # **************************************************************************
    def __init__(self, grid: Grid, plateau: NDArray[np.bool_], delta: float = 0.0):
        assert plateau.shape == grid.shape
        self.grid = grid
        self.plateau = np.array(plateau, dtype=np.bool_)
        self.freeBoundary = _freeBoundary(self.plateau)
        self.delta = float(delta)
        self.plateau.setflags(write=False)
        self.freeBoundary.setflags(write=False)

    # **************************************************************************
    def __repr__(self) -> str:
        return (f'PlateauMask({self.grid.nx}x{self.grid.ny}, plateau={int(self.plateau.sum())}, '
                f'freeBoundary={int(self.freeBoundary.sum())}, delta={self.delta:g})')

    # **************************************************************************
    @property
    def positive(self) -> NDArray[np.bool_]:
        return ~self.plateau

    @property
    def hasFreeBoundary(self) -> bool:
        return bool(self.freeBoundary.any())

    def freeBoundaryNodes(self) -> NDArray[np.int64]:
        """``(k, 2)`` indices of the free-boundary nodes in row-major order"""
        return np.argwhere(self.freeBoundary)


# ******************************************************************************
def _freeBoundary(plateau: NDArray[np.bool_]) -> NDArray[np.bool_]:
    padded = np.pad(plateau, 1, mode='edge')
    exposed = ((~padded[2:, 1:-1]) | (~padded[:-2, 1:-1]) |
               (~padded[1:-1, 2:]) | (~padded[1:-1, :-2]))
    return plateau & exposed


# ******************************************************************************
def extractPlateau(field: ScalarField, delta: float = 0.0) -> PlateauMask:
    """Plateau ``{u ≤ δ}`` of a field and its free boundary"""
    if not (delta >= 0):
        raise InvalidParams(f'delta must be nonnegative, got {delta!r}')
    return PlateauMask(field.grid, field.values <= delta, delta)


# ******************************************************************************
def freeBoundaryAnchors(mask: PlateauMask, count: int, margin: float = 0.0) -> list[Node]:
    """Evenly spaced free-boundary nodes, at least ``margin`` away from the rectangle edge

    Raises:
        EmptyBoundary: if no free-boundary node qualifies.
    """
    assert count >= 1
    nodes = [tuple(int(k) for k in node) for node in mask.freeBoundaryNodes()
             if mask.grid.distanceToEdge(mask.grid.position(tuple(node))) >= margin]
    if not nodes:
        raise EmptyBoundary(f'No free-boundary node at least {margin:g} from the edge')
    picks = np.unique(np.linspace(0, len(nodes) - 1, min(count, len(nodes))).round().astype(int))
    return [nodes[k] for k in picks]


# ******************************************************************************
def refineAnchor(field: ScalarField, mask: PlateauMask, node: Node) -> Point:
    """Anchor moved half a cell from a free-boundary node towards its largest positive 4-neighbour.

    The continuous free boundary lies between the last plateau node and the
    first positive one.
    """
    grid = field.grid
    if grid.isBoundary(node):
        raise BoundaryNode(f'Anchor {node} lies on the grid boundary')
    i, j = node
    best, step = -np.inf, (0, 0)
    for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
        if mask.plateau[i + di, j + dj]:
            continue
        value = field.values[i + di, j + dj]
        if value > best:
            best, step = value, (di, dj)
    x, y = grid.position(node)
    return x + 0.5 * grid.h * step[0], y + 0.5 * grid.h * step[1]


# ******************************************************************************
