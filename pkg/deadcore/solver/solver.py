# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Monotone solver of the discrete Dirichlet problem.

The solution is approached from above, starting at the discrete
infinity-harmonic function with the same data (a supersolution), and is
trapped from below by the solution of ``Δ∞u = λmax‖φ‖∞^γ`` restricted to
``u ≥ 0`` (a subsolution). Every sweep solves the scalar node equation of the
min/max stencil exactly, so the iterates decrease monotonically.

Stopping uses the largest nodal change of a sweep divided by one minus the
contraction rate observed over the residual interval, so that a converged
iterate is within ``tolUpdate`` of the discrete solution and not merely
moving slowly. The min/max residual is checked every ``residualInterval``
sweeps as the second criterion.
"""
# ******************************************************************************
import logging
import math
import time
from typing import Optional

import numpy as np
from numpy.typing import NDArray
from strenum import StrEnum
from tqdm import tqdm

from deadcore.constants import Rx
from deadcore.core.field import ScalarField
from deadcore.core.grid import Grid, Node
from deadcore.core.params import DefaultTolUpdate, Params, Scheme
from deadcore.exceptions import BoundaryNode, BracketFailure, CriticalGamma, GridMismatch, NotConverged
from deadcore.misc.utils import elapsedText
from deadcore.operator import kernels
from deadcore.operator.residual import residualField
from deadcore.solver.problem import Problem, SolveReport
from deadcore.solver.sweeps import MaxNodeIterations, NodeToleranceFactor, Relaxation

# ******************************************************************************
DefaultResidualInterval: int = 10
DefaultDeltaPlateauFactor: float = 100.0
"""Plateau threshold relative to ``tolUpdate``."""
SandwichSlackFactor: float = 10.0
"""Slack of the Perron sandwich check relative to ``tolUpdate``."""
HarmonicTolResidual: float = 1e-8


# ******************************************************************************
class StartFrom(StrEnum):
    Upper = 'upper'
    Lower = 'lower'


# ******************************************************************************
class _Outcome(object):
    __slots__ = ('sweeps', 'maxUpdate', 'maxResidual', 'errorEstimate', 'converged')

    def __init__(self):
        self.sweeps = 0
        self.maxUpdate = math.inf
        self.maxResidual = math.inf
        self.errorEstimate = math.inf
        self.converged = False


# ******************************************************************************
def _errorEstimate(history: list[float], window: int) -> float:
    """Distance to the fixed point implied by the last change and the contraction rate"""
    delta = history[-1]
    if delta == 0.0:
        return 0.0
    if len(history) <= window or history[-1 - window] <= 0.0:
        return math.inf
    rate = (delta / history[-1 - window]) ** (1.0 / window)
    if rate >= 1.0:
        return math.inf
    return delta / (1.0 - rate)


# ******************************************************************************
def _relax(relaxation: Relaxation, tolUpdate: float, tolResidual: float, maxSweeps: int,
           residualInterval: int, progress: bool, label: str) -> _Outcome:
    """Sweep until one stopping criterion holds or the sweep limit is spent"""
    logger = logging.getLogger(Rx.ApplicationName)
    outcome = _Outcome()
    history: list[float] = []
    with tqdm(total=maxSweeps, desc=label, unit='sweep', disable=not progress, leave=False) as bar:
        for sweep in range(1, maxSweeps + 1):
            history.append(relaxation.sweep())
            outcome.sweeps = sweep
            outcome.errorEstimate = _errorEstimate(history, residualInterval)
            bar.update(1)
            if outcome.errorEstimate <= tolUpdate:
                outcome.converged = True
                break
            if sweep % residualInterval == 0:
                outcome.maxResidual = relaxation.maxResidual()
                logger.debug(f'{label}: sweep {sweep}, update {history[-1]:.3e}, '
                             f'residual {outcome.maxResidual:.3e}')
                bar.set_postfix(residual=f'{outcome.maxResidual:.2e}')
                if outcome.maxResidual <= tolResidual:
                    outcome.converged = True
                    break

    outcome.maxUpdate = history[-1] if history else 0.0
    outcome.maxResidual = relaxation.maxResidual()
    return outcome


# ******************************************************************************
def _startValues(data: NDArray[np.float64], fixed: NDArray[np.bool_], level: float) -> NDArray[np.float64]:
    values = np.array(data, dtype=np.float64)
    values[~fixed] = level
    return values


# ******************************************************************************
def _harmonicValues(grid: Grid, data: NDArray[np.float64], fixed: NDArray[np.bool_], tolUpdate: float,
                    maxSweeps: int, residualInterval: int, progress: bool,
                    label: str) -> tuple[NDArray[np.float64], _Outcome]:
    """Descent from ``max φ`` towards the discrete infinity-harmonic extension"""
    relaxation = Relaxation(_startValues(data, fixed, float(data[fixed].max())), fixed,
                            np.zeros(grid.shape), 0.0, grid.h, tolUpdate)
    outcome = _relax(relaxation, tolUpdate, HarmonicTolResidual, maxSweeps, residualInterval, progress, label)
    return relaxation.values, outcome


# ******************************************************************************
def initialBounds(problem: Problem, residualInterval: int = DefaultResidualInterval,
                  progress: bool = False) -> tuple[ScalarField, ScalarField]:
    """Perron sub/supersolution pair ``(lower, upper)``.

    ``upper`` is the discrete infinity-harmonic function with data ``φ``;
    ``lower`` solves ``Δ∞u = K·[u > 0]`` with ``K = λmax‖φ‖∞^γ`` from below,
    which is the projected solution of ``Δ∞u = K`` with ``u ≥ 0``. Stopping
    either relaxation early keeps it a super/subsolution.
    """
    logger = logging.getLogger(Rx.ApplicationName)
    params = problem.params
    grid = problem.grid
    fixed = problem.dirichletMask
    data = problem.boundaryData.values
    maxSweeps = params.sweepLimit(grid)

    upperValues, outcome = _harmonicValues(grid, data, fixed, params.tolUpdate, maxSweeps,
                                           residualInterval, progress, 'upper bound')
    if not outcome.converged:
        logger.debug(f'Upper bound stopped after {outcome.sweeps} sweeps (update {outcome.maxUpdate:.3e})')

    K = params.lambdaMax * problem.dataSup() ** params.gamma
    if K == 0.0:
        lowerValues = upperValues.copy()
    else:
        relaxation = Relaxation(_startValues(data, fixed, 0.0), fixed, np.full(grid.shape, K), 0.0,
                                grid.h, params.tolUpdate)
        outcome = _relax(relaxation, params.tolUpdate, params.residualTolerance(problem.dataSup()),
                         maxSweeps, residualInterval, progress, 'lower bound')
        if not outcome.converged:
            logger.debug(f'Lower bound stopped after {outcome.sweeps} sweeps (update {outcome.maxUpdate:.3e})')
        lowerValues = relaxation.values

    return ScalarField(grid, lowerValues), ScalarField(grid, upperValues)


# ******************************************************************************
def nodeUpdate(u: ScalarField, node: Node, params: Params) -> float:
    """Value at ``node`` solving the min/max node equation with the neighbours of ``u`` frozen

    Raises:
        BoundaryNode: for nodes on the rectangle edge.
        BracketFailure: if the node residual has no sign change over its bracket.
    """
    grid = u.grid
    if grid.isBoundary(node):
        raise BoundaryNode(f'Node {node} lies on the grid boundary')
    i, j = node
    lam = float(params.lambdaArray(grid)[i, j])
    t, status, low, high = kernels.solveNode(np.ascontiguousarray(u.values), i, j, lam, float(params.gamma),
                                             grid.h, NodeToleranceFactor * params.tolUpdate, MaxNodeIterations)
    if status != kernels.StatusOk:
        raise BracketFailure(node, float(low), float(high))
    return float(t)


# ******************************************************************************
def solve(problem: Problem, critical: bool = False, raiseOnFailure: bool = True,
          start: StartFrom | str = StartFrom.Upper, deltaPlateau: Optional[float] = None,
          residualInterval: int = DefaultResidualInterval,
          progress: bool = False) -> tuple[ScalarField, SolveReport]:
    """Solve the discrete Dirichlet problem by monotone Gauss-Seidel sweeps.

    Args:
        problem: grid, data and coefficients.
        critical: allow the critical exponent ``γ = 3``.
        raiseOnFailure: raise :py:class:`NotConverged` when the sweep limit
            runs out; otherwise return the best iterate with
            ``converged = False``.
        start: relax down from the upper bound (default) or up from the lower.
        deltaPlateau: plateau threshold of the report, ``100·tolUpdate`` when
            not given.
        residualInterval: sweeps between residual checks.
        progress: show a progress bar.

    Returns:
        The discrete solution and its :py:class:`SolveReport`.

    Raises:
        CriticalGamma: for ``γ = 3`` without ``critical``.
        NotConverged: see ``raiseOnFailure``.
        BracketFailure: propagated from the node solves.
    """
    logger = logging.getLogger(Rx.ApplicationName)
    params = problem.params
    if params.isCritical and not critical:
        raise CriticalGamma('gamma = 3 needs the critical-case flag')

    startTime = time.perf_counter()
    grid = problem.grid
    fixed = problem.dirichletMask
    free = ~fixed
    tol = params.tolUpdate

    lower, upper = initialBounds(problem, residualInterval, progress)
    initial = upper if StartFrom(start) == StartFrom.Upper else lower
    relaxation = Relaxation(initial.values, fixed, params.lambdaArray(grid), params.gamma, grid.h, tol)
    outcome = _relax(relaxation, tol, params.residualTolerance(problem.dataSup()), params.sweepLimit(grid),
                     residualInterval, progress, 'solve')

    field = ScalarField(grid, relaxation.values)
    u = field.values
    slack = SandwichSlackFactor * tol
    violations = int(np.count_nonzero(free & ((u < lower.values - slack) | (u > upper.values + slack))))
    if violations:
        logger.warning(f'{violations} nodes left the Perron bracket by more than {slack:.1e}')

    delta = DefaultDeltaPlateauFactor * tol if deltaPlateau is None else deltaPlateau
    plateauFraction = float(np.count_nonzero(u[free] <= delta)) / max(int(np.count_nonzero(free)), 1)

    schemeResidual = None
    if Scheme(params.scheme) != Scheme.MinMaxStencil:
        schemeResidual = residualField(field, params, fixedMask=fixed).supNorm()

    report = SolveReport(sweeps=outcome.sweeps, finalMaxResidual=outcome.maxResidual,
                         finalMaxUpdate=outcome.maxUpdate, errorEstimate=outcome.errorEstimate,
                         plateauFraction=plateauFraction, converged=outcome.converged,
                         bracketViolations=violations, schemeResidual=schemeResidual)

    elapsed = elapsedText(time.perf_counter() - startTime)
    if not outcome.converged:
        message = (f'No convergence after {outcome.sweeps} sweeps: update {outcome.maxUpdate:.3e}, '
                   f'residual {outcome.maxResidual:.3e}')
        logger.warning(f'{message} ({elapsed})')
        if raiseOnFailure:
            raise NotConverged(message, field=field, report=report)
    else:
        logger.info(f'Solved {grid.nx}x{grid.ny} (gamma={params.gamma:g}) in {outcome.sweeps} sweeps, '
                    f'residual {outcome.maxResidual:.3e}, plateau {plateauFraction:.1%} ({elapsed})')
    return field, report


# ******************************************************************************
def solveInfinityHarmonic(grid: Grid, boundaryData: ScalarField, tolUpdate: float = DefaultTolUpdate,
                          maxSweeps: Optional[int] = None, fixedMask: Optional[NDArray[np.bool_]] = None,
                          residualInterval: int = DefaultResidualInterval,
                          raiseOnFailure: bool = True) -> ScalarField:
    """Discrete infinity-harmonic extension of the data (``λ ≡ 0``).

    The data may change sign here.

    Raises:
        NotConverged: if ``maxSweeps`` (default ``100·max(nx, ny)``) runs out.
    """
    if not boundaryData.grid.sameAs(grid):
        raise GridMismatch('boundary data lives on a different grid')
    fixed = grid.boundaryMask()
    if fixedMask is not None:
        fixed |= fixedMask
    sweeps = maxSweeps if maxSweeps is not None else Params(gamma=0.0, lam=0.0).sweepLimit(grid)
    values, outcome = _harmonicValues(grid, boundaryData.values, fixed, tolUpdate, sweeps,
                                      residualInterval, False, 'infinity harmonic')
    field = ScalarField(grid, values)
    if not outcome.converged:
        message = f'Infinity-harmonic solve stopped after {outcome.sweeps} sweeps (update {outcome.maxUpdate:.3e})'
        logging.getLogger(Rx.ApplicationName).warning(message)
        if raiseOnFailure:
            raise NotConverged(message, field=field)
    return field


# ******************************************************************************
