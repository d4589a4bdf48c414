# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Box-counting dimension of the free boundary.

Boxes are blocks of ``k x k`` nodes, ``k = round(ε/h)``, counted with
``numpy.add.reduceat``; the dimension is the slope of ``log N`` against
``log(1/ε)``.
"""
# ******************************************************************************
import math

import numpy as np
from scipy import stats

from deadcore.exceptions import EmptyBoundary, InsufficientData, ScaleUnderResolved
from deadcore.fbgeom.plateau import PlateauMask

# ******************************************************************************
MinimumScales: int = 4
MinimumOctaves: float = 2.0
SmallestBoxCells: float = 2.0


# ******************************************************************************
def boxCount(flags: np.ndarray, k: int) -> int:
    """Number of ``k x k`` node blocks holding at least one flagged node"""
    counts = np.add.reduceat(np.add.reduceat(flags.astype(np.int64), np.arange(0, flags.shape[0], k), axis=0),
                             np.arange(0, flags.shape[1], k), axis=1)
    return int(np.count_nonzero(counts))


# ******************************************************************************
def defaultScales(mask: PlateauMask, count: int = 5) -> list[float]:
    """Box sizes ``2h, 4h, ...`` up to a quarter of the shorter side"""
    grid = mask.grid
    limit = 0.25 * min(grid.extent)
    scales = [SmallestBoxCells * grid.h * 2 ** k for k in range(count)]
    return [s for s in scales if s <= limit]


# ******************************************************************************
def boxDimension(mask: PlateauMask, scales: list[float] | None = None) -> float:
    """Box-counting dimension of the free-boundary nodes

    Raises:
        EmptyBoundary: if there is no free-boundary node.
        ScaleUnderResolved: if a box size is below ``2h``.
        InsufficientData: fewer than 4 scales or less than two octaves.
    """
    if not mask.hasFreeBoundary:
        raise EmptyBoundary('The mask has no free-boundary node')
    grid = mask.grid
    scales = defaultScales(mask) if scales is None else sorted(scales)
    if any(s < SmallestBoxCells * grid.h * (1 - 1e-9) for s in scales):
        raise ScaleUnderResolved(f'Box sizes must be at least {SmallestBoxCells:g}h = {SmallestBoxCells * grid.h:g}')
    if len(scales) < MinimumScales or math.log2(scales[-1] / scales[0]) < MinimumOctaves - 1e-9:
        raise InsufficientData(f'Need {MinimumScales} scales spanning {MinimumOctaves:g} octaves, got {scales}')

    sizes = np.array([max(1, int(round(s / grid.h))) * grid.h for s in scales])
    counts = np.array([boxCount(mask.freeBoundary, int(round(s / grid.h))) for s in sizes])
    fit = stats.linregress(np.log(1.0 / sizes), np.log(counts))
    return float(fit.slope)


# ******************************************************************************
