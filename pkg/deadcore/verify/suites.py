# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Named experiment suites.

Suites run their experiments one after the other in a fixed order; every
solve parallelizes internally over the nodes of one colour.
"""
# ******************************************************************************
import logging
from enum import auto
from typing import Callable, Optional

from pydantic import BaseModel, Field, PositiveFloat, PositiveInt
from strenum import StrEnum

from deadcore.analytic.radial import tau
from deadcore.constants import Rx
from deadcore.core.field import ScalarField
from deadcore.core.grid import Grid, makeGrid
from deadcore.core.params import DefaultTolUpdate, Params
from deadcore.solver.problem import Problem
from deadcore.solver.solver import DefaultDeltaPlateauFactor, solve
from deadcore.verify.experiments import (checkComparison, checkNondegeneracy, checkSandwich, growthProblem,
                                         runCriticalExperiment, runGeometryExperiment, runLiouvilleExperiment,
                                         runRadialExperiment, runScalingExperiment, runUniquenessExperiment)
from deadcore.verify.report import ExperimentReport

# ******************************************************************************
SuiteGammas: tuple[float, ...] = (0.0, 1.0, 2.0)
DataLevels: tuple[float, ...] = (1.0, 0.5, 0.25)
LiouvilleThetas: tuple[float, ...] = (0.25, 0.5, 0.75)
ComparisonSlackFactor: float = 10.0
ContrastLambda: float = 500.0
NondegeneracyRadii: tuple[float, ...] = (0.05, 0.1, 0.2)
NondegeneracyFraction: float = 0.5
GrowthRadii: tuple[float, ...] = (0.25, 0.125, 0.0625, 0.03125)


# ******************************************************************************
class Suite(StrEnum):
    """Experiment suites of the ``verify`` command"""
    comparison = auto()
    liouville = auto()
    critical = auto()
    scaling = auto()
    radial = auto()
    perron = auto()
    geometry = auto()
    full = auto()


# ******************************************************************************
class SuiteConfig(BaseModel):
    """Sizes and tolerances shared by the experiments of a suite"""
    suite: Suite = Suite.full
    lam: PositiveFloat = Field(default=1.0, alias='lambda')
    c: PositiveFloat = 1.0
    R: PositiveFloat = 1.0
    resolution: PositiveInt = Field(default=257, ge=5, description='Nodes per side of the ball problems')
    unitResolution: PositiveInt = Field(default=129, ge=5, alias='unit_resolution',
                                        description='Nodes per side of the unit square problems')
    geometryCells: PositiveInt = Field(default=256, ge=16, alias='geometry_cells',
                                       description='Cells per unit length of the growth problem')
    tolUpdate: PositiveFloat = Field(default=DefaultTolUpdate, alias='tol_update')
    maxSweeps: Optional[PositiveInt] = Field(default=None, alias='max_sweeps')

    class Config:
        use_enum_values = True
        populate_by_name = True
        frozen = True

    # **************************************************************************
    def unitGrid(self) -> Grid:
        return makeGrid((0.0, 0.0), (1.0, 1.0), (self.unitResolution, self.unitResolution))

    def params(self, gamma: float, lam: Optional[float] = None) -> Params:
        return Params(gamma=gamma, lam=self.lam if lam is None else lam, tolUpdate=self.tolUpdate,
                      maxSweeps=self.maxSweeps)


# ******************************************************************************
def comparisonSuite(config: SuiteConfig) -> list[ExperimentReport]:
    """Every ordered pair of the data levels ``c, c/2, c/4`` for each exponent"""
    grid = config.unitGrid()
    reports = []
    for gamma in SuiteGammas:
        params = config.params(gamma)
        fields = {level: solve(Problem.constant(grid, level * config.c, params))[0] for level in DataLevels}
        for k, high in enumerate(DataLevels):
            for low in DataLevels[k + 1:]:
                reports.append(checkComparison(fields[high], fields[low], ComparisonSlackFactor * config.tolUpdate,
                                               name=f'comparison(gamma={gamma:g},phi1={high:g}c,phi2={low:g}c)'))
    return reports


# ******************************************************************************
def liouvilleSuite(config: SuiteConfig) -> list[ExperimentReport]:
    return [runLiouvilleExperiment(theta, config.R, config.lam, gamma, config.resolution,
                                   tolUpdate=config.tolUpdate, maxSweeps=config.maxSweeps)
            for gamma in SuiteGammas for theta in LiouvilleThetas]


# ******************************************************************************
def criticalSuite(config: SuiteConfig) -> list[ExperimentReport]:
    grid = config.unitGrid()
    return [runCriticalExperiment(config.lam, grid, ScalarField.constant(grid, config.c),
                                  tolUpdate=config.tolUpdate, maxSweeps=config.maxSweeps,
                                  contrastLambda=ContrastLambda)]


# ******************************************************************************
def scalingSuite(config: SuiteConfig) -> list[ExperimentReport]:
    """Identity scaling plus the dyadic map ``K = 2^{4/(3-γ)}, ρ = 1/2`` for each exponent"""
    grid = config.unitGrid()
    reports = [runScalingExperiment(Problem.constant(grid, config.c, config.params(1.0)), 1.0, 1.0,
                                    name='scaling(identity)')]
    for gamma in SuiteGammas:
        K = 2.0 ** (4.0 / (3.0 - gamma))
        reports.append(runScalingExperiment(Problem.constant(grid, config.c, config.params(gamma)), K, 0.5,
                                            name=f'scaling(gamma={gamma:g},dyadic)'))
    return reports


# ******************************************************************************
def radialSuite(config: SuiteConfig) -> list[ExperimentReport]:
    """Ball solve against the radial solution with core radius ``R/2``, then nondegeneracy at the detected core edge"""
    gamma = 1.0
    c = tau(config.lam, gamma) * (0.5 * config.R) ** 2
    report, field = runRadialExperiment(config.lam, gamma, c, config.R, config.resolution,
                                        tolUpdate=config.tolUpdate, maxSweeps=config.maxSweeps)
    X0 = (report.metrics['core_radius_detected'], 0.0)
    nondegeneracy = checkNondegeneracy(field, X0, list(NondegeneracyRadii), NondegeneracyFraction, gamma,
                                       config.lam, delta=DefaultDeltaPlateauFactor * config.tolUpdate)
    return [report, nondegeneracy]


# ******************************************************************************
def perronSuite(config: SuiteConfig) -> list[ExperimentReport]:
    """Uniqueness (limits from above and below agree) and the Perron sandwich on a dead-core problem"""
    problem = Problem.constant(config.unitGrid(), config.c, config.params(1.0, ContrastLambda))
    return [runUniquenessExperiment(problem), checkSandwich(problem)]


# ******************************************************************************
def geometrySuite(config: SuiteConfig) -> list[ExperimentReport]:
    return [runGeometryExperiment(growthProblem(gamma, config.geometryCells, config.tolUpdate, config.maxSweeps),
                                  radii=list(GrowthRadii))
            for gamma in SuiteGammas]


# ******************************************************************************
SuiteRunners: dict[Suite, Callable[[SuiteConfig], list[ExperimentReport]]] = {
    Suite.comparison: comparisonSuite,
    Suite.liouville: liouvilleSuite,
    Suite.critical: criticalSuite,
    Suite.scaling: scalingSuite,
    Suite.radial: radialSuite,
    Suite.perron: perronSuite,
    Suite.geometry: geometrySuite,
}


# ******************************************************************************
def runSuite(config: SuiteConfig) -> list[ExperimentReport]:
    """Run one suite, or all of them in declaration order for ``full``"""
    logger = logging.getLogger(Rx.ApplicationName)
    suite = Suite(config.suite)
    suites = list(SuiteRunners) if suite == Suite.full else [suite]
    reports = []
    for s in suites:
        logger.info(f'Running the {s} suite...')
        reports.extend(SuiteRunners[s](config))
    return reports


# ******************************************************************************
