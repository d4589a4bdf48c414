# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Positive-phase density and porosity of the free boundary."""
# ******************************************************************************
import math
from typing import Optional

import numpy as np
from numpy.typing import NDArray
from scipy import ndimage

from deadcore.core.field import ScalarField
from deadcore.core.grid import Point, SquareCellTolerance
from deadcore.exceptions import EmptyBall
from deadcore.fbgeom.plateau import PlateauMask

# ******************************************************************************
MinimumBallNodes: int = 10
DefaultPorosityFloor: float = 0.05
"""Smallest accepted pore radius relative to the ball radius (calibration)."""
DefaultPorositySigma: float = 0.5


# ******************************************************************************
def _ballMask(mask: PlateauMask, X0: Point, r: float, minimum: int = 1) -> NDArray[np.bool_]:
    inside = mask.grid.distances(X0) <= r * (1.0 + SquareCellTolerance)
    count = int(inside.sum())
    if count < minimum:
        raise EmptyBall(f'Ball of radius {r:g} at {X0} holds {count} nodes, {minimum} needed')
    return inside


# ******************************************************************************
def positiveDensity(mask: PlateauMask, X0: Point, r: float) -> float:
    """``#(non-plateau nodes in B_r(X0))·h² / (πr²)``

    Raises:
        EmptyBall: if the ball holds fewer than 10 nodes.
    """
    inside = _ballMask(mask, X0, r, MinimumBallNodes)
    count = int(np.count_nonzero(inside & mask.positive))
    return count * mask.grid.h ** 2 / (math.pi * r * r)


# ******************************************************************************
def _distanceToFreeBoundary(mask: PlateauMask) -> NDArray[np.float64]:
    if not mask.hasFreeBoundary:
        return np.full(mask.grid.shape, np.inf)
    return ndimage.distance_transform_edt(~mask.freeBoundary) * mask.grid.h


# ******************************************************************************
def porosityWitness(mask: PlateauMask, X0: Point, r: float, field: Optional[ScalarField] = None,
                    sigma: float = DefaultPorositySigma,
                    floor: float = DefaultPorosityFloor) -> Optional[tuple[Point, float]]:
    """A ball inside ``B_r(X0)`` free of free-boundary nodes, of radius at least ``floor·r``.

    With ``field`` given, the node nearest ``σY + (1-σ)X0`` (``Y`` the
    maximiser of ``u`` over ``B_r(X0)``) is tried first and returned when it
    qualifies; otherwise every node of the ball is searched and the largest
    pore returned.

    Returns:
        ``(center, innerRadius)`` or ``None`` when no pore of the required size exists.

    Raises:
        EmptyBall: if the ball holds no node.
    """
    grid = mask.grid
    inside = _ballMask(mask, X0, r)
    clearance = _distanceToFreeBoundary(mask)
    room = np.minimum(clearance, r - grid.distances(X0))
    room[~inside] = -np.inf

    if field is not None:
        values = np.where(inside, field.values, -np.inf)
        Y = grid.position(tuple(int(k) for k in np.unravel_index(np.argmax(values), values.shape)))
        seed = grid.nearestNode((sigma * Y[0] + (1 - sigma) * X0[0], sigma * Y[1] + (1 - sigma) * X0[1]))
        if inside[seed] and room[seed] >= floor * r:
            return grid.position(seed), float(room[seed])

    best = np.unravel_index(np.argmax(room), room.shape)
    if room[best] < floor * r:
        return None
    return grid.position((int(best[0]), int(best[1]))), float(room[best])


# ******************************************************************************
