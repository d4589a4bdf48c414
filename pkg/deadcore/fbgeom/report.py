# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Free-boundary analysis of a solved field.

The growth exponent is fitted at evenly spaced free-boundary anchors (each
moved half a cell towards the positive phase); the reported ``alphaHat`` is
the median over anchors. The constants below (density floor, dimension gap,
porosity floor) are calibrations of the discrete experiments.
"""
# ******************************************************************************
import logging
from pathlib import Path
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field

from deadcore.analytic.radial import growthExponent
from deadcore.constants import Rx
from deadcore.core.field import ScalarField
from deadcore.exceptions import DeadCoreException, EmptyBoundary
from deadcore.fbgeom.boxcount import boxDimension, defaultScales
from deadcore.fbgeom.density import positiveDensity, porosityWitness
from deadcore.fbgeom.growth import fitGrowthExponent, growthRadii, supOverBalls
from deadcore.fbgeom.plateau import extractPlateau, freeBoundaryAnchors, refineAnchor
from deadcore.misc.utils import canonicalJson, formatNumber

# ******************************************************************************
DefaultAnchorCount: int = 8
DensityRadiusCells: float = 8.0
DensityRadiusMax: float = 0.25


# ******************************************************************************
class PorosityPore(BaseModel):
    x: float
    y: float
    radius: float


class AnchorPoint(BaseModel):
    x: float
    y: float


# ******************************************************************************
class FreeBoundaryReport(BaseModel):
    """Geometric measurements of one free boundary.

    Serialized with the snake_case keys of the report format.
    """
    alphaHat: float = Field(serialization_alias='alpha_hat')
    CHat: float = Field(serialization_alias='C_hat')
    alphaExpected: float = Field(serialization_alias='alpha_expected')
    alphaSamples: list[float] = Field(default_factory=list, serialization_alias='alpha_samples')
    densityMin: float = Field(ge=0.0, le=1.0, serialization_alias='density_min')
    boxDimension: float = Field(serialization_alias='box_dimension')
    anchors: list[AnchorPoint] = Field(default_factory=list)
    scales: list[float] = Field(default_factory=list)
    porosityWitness: list[Optional[PorosityPore]] = Field(default_factory=list, serialization_alias='porosity_witness')

    # **************************************************************************
    def toJson(self) -> bytes:
        return canonicalJson(self.model_dump(by_alias=True), indent=True)


# ******************************************************************************
def analyzeFreeBoundary(field: ScalarField, gamma: float, delta: float, anchorCount: int = DefaultAnchorCount,
                        scales: Optional[list[float]] = None, radii: Optional[list[float]] = None,
                        margin: Optional[float] = None, supCsv: Optional[Path] = None) -> FreeBoundaryReport:
    """Fit the growth exponent and measure density, box dimension and porosity.

    Args:
        field: solved field.
        gamma: absorption exponent (sets the expected exponent ``4/(3-γ)``).
        delta: plateau threshold.
        anchorCount: number of free-boundary anchors.
        scales: box sizes, default ``2h .. 32h``.
        radii: ball radii of the growth fit; by default dyadic radii from a
            quarter of the distance to the edge down to four cells.
        margin: smallest distance of an anchor to the rectangle edge, 16h by default.
        supCsv: optional output of the ``(r, sup)`` samples of every anchor.

    Raises:
        EmptyBoundary: if the field has no free boundary away from the edge.
    """
    logger = logging.getLogger(Rx.ApplicationName)
    grid = field.grid
    mask = extractPlateau(field, delta)
    if not mask.hasFreeBoundary:
        raise EmptyBoundary('The field has no plateau with a free boundary')

    margin = 16.0 * grid.h if margin is None else margin
    anchors = [refineAnchor(field, mask, node) for node in freeBoundaryAnchors(mask, anchorCount, margin)]

    alphas, prefactors = [], []
    densities = []
    pores: list[Optional[PorosityPore]] = []
    rows: list[tuple[float, float, float, float]] = []
    for X0 in anchors:
        anchorRadii = list(radii) if radii else growthRadii(grid, X0)
        try:
            samples = supOverBalls(field, X0, anchorRadii)
            alpha, C = fitGrowthExponent(samples)
        except DeadCoreException as e:
            logger.warning(f'Growth fit skipped at ({X0[0]:.4f}, {X0[1]:.4f}): {e}')
            continue
        alphas.append(alpha)
        prefactors.append(C)
        rows.extend((X0[0], X0[1], r, s) for r, s in samples)

        for r in anchorRadii:
            if DensityRadiusCells * grid.h <= r <= DensityRadiusMax:
                densities.append(positiveDensity(mask, X0, r))
        pore = porosityWitness(mask, X0, max(anchorRadii), field=field)
        pores.append(None if pore is None else PorosityPore(x=pore[0][0], y=pore[0][1], radius=pore[1]))

    if not alphas:
        raise EmptyBoundary('No free-boundary anchor supports a growth fit')

    usedScales = defaultScales(mask) if scales is None else list(scales)
    report = FreeBoundaryReport(
        alphaHat=float(np.median(alphas)), CHat=float(np.median(prefactors)),
        alphaExpected=growthExponent(gamma), alphaSamples=alphas,
        densityMin=min(1.0, min(densities)) if densities else 0.0,
        boxDimension=boxDimension(mask, usedScales),
        anchors=[AnchorPoint(x=x, y=y) for x, y in anchors], scales=usedScales,
        porosityWitness=pores)

    if supCsv is not None:
        _writeSupSamples(supCsv, rows)
    logger.info(f'Free boundary: alpha {report.alphaHat:.4f} (expected {report.alphaExpected:.4f}), '
                f'density {report.densityMin:.3f}, dimension {report.boxDimension:.3f}')
    return report


# ******************************************************************************
def _writeSupSamples(csvFile: Path, rows: list[tuple[float, float, float, float]]) -> None:
    with csvFile.open('w', encoding='utf-8', newline='\n') as f:
        f.write('x0,y0,r,sup\n')
        for row in rows:
            f.write(','.join(formatNumber(v) for v in row) + '\n')


# ******************************************************************************
