# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Property experiments on solver output.

Each experiment returns an :py:class:`~deadcore.verify.report.ExperimentReport`
whose ``passed`` flag compares the recorded metrics against thresholds that
are recorded alongside them.
"""
# ******************************************************************************
import logging
import math
from typing import Optional

import numpy as np
from scipy import ndimage

from deadcore.analytic.barriers import barrierPhi
from deadcore.analytic.radial import evalRadial, growthExponent, liouvilleCoreRadius, makeRadial, tau
from deadcore.constants import Rx
from deadcore.core.field import ScalarField
from deadcore.core.grid import Grid, Point, SquareCellTolerance, makeGrid
from deadcore.core.params import DefaultTolUpdate, Params
from deadcore.exceptions import GridMismatch, InvalidParams, NotConverged
from deadcore.fbgeom.growth import supOverBalls
from deadcore.fbgeom.report import analyzeFreeBoundary
from deadcore.operator import kernels
from deadcore.solver.problem import Problem, ballProblem
from deadcore.solver.scaling import rescaleProblem, scaledCoefficient
from deadcore.solver.solver import (DefaultDeltaPlateauFactor, SandwichSlackFactor, StartFrom, initialBounds,
                                    solve)
from deadcore.verify.report import ExperimentReport

# ******************************************************************************
AgreementFactor: float = 20.0
"""Allowed discrepancy of two solves of the same discrete problem, in units of ``tolUpdate``."""
EnvelopeSlack: float = 0.05
LiouvilleCoreCells: float = 4.0
RadialSlackFraction: float = 0.02
RadialCoreCells: float = 2.0
BarrierLambdaFactor: float = 4.0
ResidualStopOff: float = 1e-300
"""Residual threshold that never triggers, leaving the update criterion alone."""
AlphaTolerance: float = 0.15
DensityFloor: float = 0.05
DimensionRange: tuple[float, float] = (0.85, 1.85)

GrowthPlateauDistance: float = 0.25
"""Distance from the edge at which the growth problem's plateau starts."""


# ******************************************************************************
def _plateauDelta(tolUpdate: float, deltaPlateau: Optional[float]) -> float:
    return DefaultDeltaPlateauFactor * tolUpdate if deltaPlateau is None else deltaPlateau


# ******************************************************************************
def checkComparison(u1: ScalarField, u2: ScalarField, tol: float, name: str = 'comparison') -> ExperimentReport:
    """Discrete comparison: ``u1 ≥ u2 - tol`` at every node.

    ``u1`` and ``u2`` are solutions with ordered data ``φ₁ ≥ φ₂`` and
    identical coefficients.

    Raises:
        GridMismatch: if the fields live on different grids.
    """
    if not u1.grid.sameAs(u2.grid):
        raise GridMismatch('compared fields live on different grids')
    minimum = float((u1.values - u2.values).min())
    return ExperimentReport(name=name, passed=minimum >= -tol,
                            metrics={'min_difference': minimum, 'tolerance': float(tol)})


# ******************************************************************************
def checkNondegeneracy(field: ScalarField, X0: Point, radii: list[float], cFrac: float, gamma: float, lam: float,
                       delta: float = 0.0, name: str = 'nondegeneracy') -> ExperimentReport:
    """``sup_{B_r(X0)} u ≥ cFrac·τ(λ,γ)·r^{4/(3-γ)}`` for every given radius.

    ``X0`` must lie in the closure of the positive phase: some node within a
    cell diagonal of ``X0`` exceeds ``delta``. Otherwise the anchor is vacuous
    and the experiment fails.

    Raises:
        EmptyBall: if a ball holds no node.
    """
    if not 0 < cFrac < 1:
        raise InvalidParams(f'c_frac must lie in (0, 1), got {cFrac!r}')
    if not radii:
        raise InvalidParams('At least one radius is needed')

    grid = field.grid
    near = grid.distances(X0) <= math.sqrt(2.0) * grid.h * (1.0 + SquareCellTolerance)
    anchorMax = float(field.values[near].max()) if near.any() else 0.0
    if anchorMax <= delta:
        return ExperimentReport(name=name, passed=False,
                                metrics={'anchor_max': anchorMax, 'delta': float(delta)},
                                notes='anchor is not in the closure of the positive phase')

    coefficient = cFrac * tau(lam, gamma)
    alpha = growthExponent(gamma)
    ratios = [s / (coefficient * r ** alpha) for r, s in supOverBalls(field, X0, radii)]
    worst = min(ratios)
    return ExperimentReport(name=name, passed=worst >= 1.0,
                            metrics={'worst_ratio': worst, 'c_frac': float(cFrac),
                                     'coefficient': coefficient, 'anchor_max': anchorMax})


# ******************************************************************************
def runLiouvilleExperiment(theta: float, R: float, lam: float, gamma: float, resolution: int,
                           tolUpdate: float = DefaultTolUpdate, maxSweeps: Optional[int] = None,
                           deltaPlateau: Optional[float] = None, envelopeSlack: float = EnvelopeSlack,
                           coreCells: float = LiouvilleCoreCells) -> ExperimentReport:
    """Quantitative Liouville bound on ``B_R`` with data ``θ·τ·R^α``.

    Passes iff the solution stays below the envelope
    ``τ(|X| - (1-θ^{(3-γ)/4})R)₊^α`` up to ``envelopeSlack·data`` and the
    plateau contains the ball of radius ``(1-θ^{(3-γ)/4})R - coreCells·h``.

    Raises:
        InvalidParams: unless ``0 < θ < 1``; ``θ = 1`` is the equality case
            the bound does not cover.
    """
    if not 0 < theta < 1:
        raise InvalidParams(f'theta must lie strictly between 0 and 1, got {theta!r}')
    name = f'liouville(theta={theta:g},gamma={gamma:g})'
    t = tau(lam, gamma)
    alpha = growthExponent(gamma)
    data = theta * t * R ** alpha
    params = Params(gamma=gamma, lam=lam, tolUpdate=tolUpdate, maxSweeps=maxSweeps)
    problem = ballProblem(R, data, params, resolution)
    delta = _plateauDelta(tolUpdate, deltaPlateau)
    field, report = solve(problem, deltaPlateau=delta)

    grid = field.grid
    free = problem.freeMask
    u = field.values
    rho = grid.distances((0.0, 0.0))
    shift = liouvilleCoreRadius(theta, R, gamma)
    envelope = t * np.maximum(rho - shift, 0.0) ** alpha
    maxExcess = float((u - envelope)[free].max()) / data

    required = shift - coreCells * grid.h
    core = free & (rho <= required)
    violations = int(np.count_nonzero(u[core] > delta))

    return ExperimentReport(
        name=name, passed=maxExcess <= envelopeSlack and violations == 0,
        metrics={'max_excess': maxExcess, 'envelope_slack': envelopeSlack, 'core_radius': shift,
                 'core_radius_required': required, 'plateau_violations': float(violations),
                 'sweeps': float(report.sweeps)})


# ******************************************************************************
def _barrierCheck(field: ScalarField, free: np.ndarray, tol: float) -> dict[str, float]:
    """Annulus barrier ``θ·Φ ≤ u`` about the rectangle centre, ``θ = ½ min_{∂B_{d/2}} u / max Φ``"""
    grid = field.grid
    center = (grid.origin[0] + 0.5 * grid.extent[0], grid.origin[1] + 0.5 * grid.extent[1])
    d = 0.5 * grid.distanceToEdge(center)
    lamB = BarrierLambdaFactor / (d * d)
    rho = grid.distances(center)
    u = field.values

    ring = free & (np.abs(rho - 0.5 * d) <= grid.h)
    phiMax = barrierPhi(lamB, d, (0.0, 0.0))
    theta = 0.5 * float(u[ring].min()) / phiMax if ring.any() else 0.0

    annulus = np.argwhere(free & (rho >= 0.5 * d) & (rho <= d))
    margin = math.inf
    for i, j in annulus:
        x, y = grid.position((int(i), int(j)))
        margin = min(margin, u[i, j] - theta * barrierPhi(lamB, d, (x - center[0], y - center[1])))
    return {'barrier_theta': theta, 'barrier_margin': float(margin), 'barrier_ok': float(margin >= -tol)}


# ******************************************************************************
def runCriticalExperiment(lam: float | ScalarField, grid: Grid, boundaryData: ScalarField,
                          tolUpdate: float = DefaultTolUpdate, maxSweeps: Optional[int] = None,
                          contrastLambda: Optional[float] = None, barrierCheck: bool = True) -> ExperimentReport:
    """Strong maximum principle at the critical exponent ``γ = 3``.

    Positive data forbid interior zeros, so the experiment passes iff the
    smallest interior value is positive. Identically zero data are the
    degenerate consistent case: the zero field is the solution.

    ``barrierCheck`` adds the a posteriori annulus barrier comparison;
    ``contrastLambda`` adds a ``γ = 1`` solve with the same data that must
    show a plateau. Non-convergence makes the report inconclusive.

    Raises:
        InvalidParams: for data that vanish somewhere without vanishing identically.
    """
    name = 'critical'
    params = Params(gamma=3.0, lam=lam, tolUpdate=tolUpdate, maxSweeps=maxSweeps)
    problem = Problem(grid=grid, boundaryData=boundaryData, params=params)
    data = boundaryData.values[problem.dirichletMask]
    if data.max() == 0.0:
        field, report = solve(problem, critical=True)
        top = field.supNorm()
        return ExperimentReport(name=name, passed=top <= tolUpdate,
                                metrics={'max_u': top, 'sweeps': float(report.sweeps)},
                                notes='zero data: the zero field solves the problem')
    if data.min() <= 0.0:
        raise InvalidParams(f'critical experiment needs strictly positive data (min {data.min():g})')

    try:
        field, report = solve(problem, critical=True)
    except NotConverged as e:
        logging.getLogger(Rx.ApplicationName).warning(f'Critical experiment inconclusive: {e}')
        return ExperimentReport.inconclusiveReport(name, f'gamma = 3 solve did not converge: {e}')

    free = problem.freeMask
    minU = float(field.values[free].min())
    metrics = {'min_u': minU, 'min_ratio': minU / float(data.min()), 'sweeps': float(report.sweeps)}
    passed = minU > 0.0
    if barrierCheck:
        metrics.update(_barrierCheck(field, free, tolUpdate))
        passed = passed and metrics['barrier_ok'] == 1.0

    if contrastLambda is not None:
        contrast = problem.withParams(params.replaced(gamma=1.0, lam=contrastLambda))
        try:
            _, contrastReport = solve(contrast)
        except NotConverged as e:
            return ExperimentReport.inconclusiveReport(name, f'contrast solve did not converge: {e}', metrics)
        metrics['contrast_lambda'] = float(contrastLambda)
        metrics['contrast_plateau_fraction'] = contrastReport.plateauFraction
        passed = passed and contrastReport.plateauFraction > 0.0

    return ExperimentReport(name=name, passed=passed, metrics=metrics)


# ******************************************************************************
def runScalingExperiment(problem: Problem, K: float, rho: float, name: str = 'scaling') -> ExperimentReport:
    """Compare the solution of the rescaled problem with ``K·u(ρ·)`` node by node.

    The original is solved to ``tolUpdate/K`` when ``K > 1`` so both sides
    carry the same absolute error; only the update criterion stops the solves.

    Raises:
        GridMismatch: if the rescaled lattice does not keep the node count.
    """
    params = problem.params.replaced(tolResidual=ResidualStopOff)
    tol = params.tolUpdate
    critical = params.isCritical
    scaled = rescaleProblem(problem.withParams(params), K, rho)
    if scaled.grid.shape != problem.grid.shape:
        raise GridMismatch(f'rescaled grid {scaled.grid.shape} differs from {problem.grid.shape}')

    original = problem.withParams(params.replaced(tolUpdate=tol / max(K, 1.0)))
    u, _ = solve(original, critical=critical)
    v, report = solve(scaled, critical=critical)
    difference = float(np.abs(v.values - K * u.values).max())
    tolerance = AgreementFactor * tol
    return ExperimentReport(name=name, passed=difference <= tolerance,
                            metrics={'max_difference': difference, 'tolerance': tolerance,
                                     'K': float(K), 'rho': float(rho),
                                     'coefficient_factor': scaledCoefficient(K, rho, params.gamma),
                                     'sweeps': float(report.sweeps)})


# ******************************************************************************
def runUniquenessExperiment(problem: Problem, name: str = 'uniqueness') -> ExperimentReport:
    """Solve from the upper and from the lower Perron bound; the limits must agree"""
    critical = problem.params.isCritical
    fromAbove, above = solve(problem, critical=critical, start=StartFrom.Upper)
    fromBelow, below = solve(problem, critical=critical, start=StartFrom.Lower)
    difference = float(np.abs(fromAbove.values - fromBelow.values).max())
    tolerance = AgreementFactor * problem.params.tolUpdate
    return ExperimentReport(name=name, passed=difference <= tolerance,
                            metrics={'max_difference': difference, 'tolerance': tolerance,
                                     'sweeps_from_above': float(above.sweeps),
                                     'sweeps_from_below': float(below.sweeps)})


# ******************************************************************************
def checkSandwich(problem: Problem, field: Optional[ScalarField] = None, name: str = 'sandwich') -> ExperimentReport:
    """``lower ≤ u ≤ upper`` on the free nodes, within ``10·tolUpdate``"""
    if field is None:
        field, _ = solve(problem, critical=problem.params.isCritical)
    elif not field.grid.sameAs(problem.grid):
        raise GridMismatch('field and problem live on different grids')
    lower, upper = initialBounds(problem)
    free = problem.freeMask
    u = field.values
    slack = SandwichSlackFactor * problem.params.tolUpdate
    belowLower = float((lower.values - u)[free].max())
    aboveUpper = float((u - upper.values)[free].max())
    violations = int(np.count_nonzero(free & ((u < lower.values - slack) | (u > upper.values + slack))))
    return ExperimentReport(name=name, passed=violations == 0,
                            metrics={'max_below_lower': belowLower, 'max_above_upper': aboveUpper,
                                     'violations': float(violations), 'slack': slack})


# ******************************************************************************
def runRadialExperiment(lam: float, gamma: float, c: float, R: float, resolution: int,
                        tolUpdate: float = DefaultTolUpdate, maxSweeps: Optional[int] = None,
                        deltaPlateau: Optional[float] = None, slackFraction: float = RadialSlackFraction,
                        coreCells: float = RadialCoreCells) -> tuple[ExperimentReport, ScalarField]:
    """Ball solve against the radial solution.

    Off the grid directions the min/max stencil sees at least
    ``κ = MinDirectionalFactor`` of ``Δ∞u``, so the discrete solution lies
    between the radial solution for ``λ`` (above) and the one for ``λ/κ``
    (below, lowered to the data on the Dirichlet nodes). Passes iff both
    bounds hold up to ``slackFraction·c`` and the detected core radius (the
    farthest plateau node from the centre) lies between the two exact core
    radii widened by ``coreCells·h``.

    Returns:
        The report and the solved field.
    """
    name = f'radial(gamma={gamma:g},lambda={lam:g})'
    sol = makeRadial((0.0, 0.0), R, c, lam, gamma)
    biased = makeRadial((0.0, 0.0), R, c, lam / kernels.MinDirectionalFactor, gamma)
    problem = ballProblem(R, c, Params(gamma=gamma, lam=lam, tolUpdate=tolUpdate, maxSweeps=maxSweeps),
                          resolution)
    delta = _plateauDelta(tolUpdate, deltaPlateau)
    field, report = solve(problem, deltaPlateau=delta)

    grid = field.grid
    free = problem.freeMask
    u = field.values
    upper = evalRadial(sol, grid.meshgrid())
    lower = evalRadial(biased, grid.meshgrid())
    ring = problem.dirichletMask & ndimage.binary_dilation(free, structure=np.ones((3, 3), dtype=bool))
    lower -= max(float((lower - c)[ring].max()), 0.0)
    error = float(np.abs(u - upper)[free].max()) / c
    above = float((u - upper)[free].max()) / c
    below = float((lower - u)[free].max()) / c

    rho = grid.distances((0.0, 0.0))
    plateau = free & (u <= delta)
    detected = float(rho[plateau].max()) if plateau.any() else 0.0
    window = coreCells * grid.h
    passed = (above <= slackFraction and below <= slackFraction and
              sol.rCore - window <= detected <= biased.rCore + window)
    return ExperimentReport(
        name=name, passed=passed,
        metrics={'max_error': error, 'max_above_radial': above, 'max_below_biased': below,
                 'slack_fraction': slackFraction, 'core_radius': sol.rCore,
                 'core_radius_biased': biased.rCore, 'core_radius_detected': detected,
                 'core_error_cells': abs(detected - sol.rCore) / grid.h, 'core_cells': coreCells,
                 'plateau_fraction': report.plateauFraction, 'sweeps': float(report.sweeps)}), field



# ******************************************************************************
def growthLambda(gamma: float, distance: float = GrowthPlateauDistance) -> float:
    """Thiele modulus for which the unit-data profile ``τ s^α`` reaches 1 at ``s = distance``"""
    return (distance ** -growthExponent(gamma)) ** (3.0 - gamma) * 64.0 * (1.0 + gamma) / (3.0 - gamma) ** 4


def growthProblem(gamma: float, cells: int = 256, tolUpdate: float = DefaultTolUpdate,
                  maxSweeps: Optional[int] = None) -> Problem:
    """Unit data on ``[0, 0.75] x [0.125, 0.875]`` with a plateau about ``[0.25, 0.5] x [0.375, 0.625]``"""
    n = int(round(0.75 * cells)) + 1
    grid = makeGrid((0.0, 0.125), (0.75, 0.75), (n, n))
    params = Params(gamma=gamma, lam=growthLambda(gamma), tolUpdate=tolUpdate, maxSweeps=maxSweeps)
    return Problem.constant(grid, 1.0, params)


# ******************************************************************************
def runGeometryExperiment(problem: Problem, radii: Optional[list[float]] = None, anchorCount: int = 8,
                          deltaPlateau: Optional[float] = None, alphaTolerance: float = AlphaTolerance,
                          densityFloor: float = DensityFloor,
                          dimensionRange: tuple[float, float] = DimensionRange) -> ExperimentReport:
    """Solve a dead-core problem and measure its free boundary.

    Passes iff the fitted growth exponent is within ``alphaTolerance`` of
    ``4/(3-γ)``, the positive phase density stays above ``densityFloor`` at
    every anchor and the box dimension falls inside ``dimensionRange``.
    """
    gamma = problem.params.gamma
    delta = _plateauDelta(problem.params.tolUpdate, deltaPlateau)
    field, _ = solve(problem, deltaPlateau=delta)
    fb = analyzeFreeBoundary(field, gamma, delta, anchorCount=anchorCount, radii=radii)

    alphaError = abs(fb.alphaHat - fb.alphaExpected)
    pores = sum(1 for p in fb.porosityWitness if p is not None)
    passed = (alphaError <= alphaTolerance and fb.densityMin >= densityFloor and
              dimensionRange[0] <= fb.boxDimension <= dimensionRange[1])
    return ExperimentReport(
        name=f'geometry(gamma={gamma:g})', passed=passed,
        metrics={'alpha_hat': fb.alphaHat, 'alpha_expected': fb.alphaExpected, 'alpha_error': alphaError,
                 'alpha_tolerance': alphaTolerance, 'C_hat': fb.CHat, 'density_min': fb.densityMin,
                 'density_floor': densityFloor, 'box_dimension': fb.boxDimension,
                 'dimension_low': dimensionRange[0], 'dimension_high': dimensionRange[1],
                 'porosity_witnesses': float(pores), 'anchors': float(len(fb.anchors))})


# ******************************************************************************
