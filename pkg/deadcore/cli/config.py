# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Run configuration of the command-line front end.

A run is described by a :py:class:`RunConfig`. Its values come, in order of
precedence, from command-line flags, a JSON configuration file, the
application preferences (:py:class:`~deadcore.settings.RSettings`) and the
built-in defaults.

Problem files look like::

    {
        "origin": [0, 0], "extent": [1, 1], "resolution": 129,
        "gamma": 1, "lambda": 1,
        "boundary": "constant 1",
        "scheme": "minmax", "tol_update": 1e-10
    }

``lambda`` may be ``"field"`` with ``lambda_csv`` naming a field CSV on the
same grid. ``boundary`` is ``"constant c"``, ``"ball R,c"`` (ball about the
rectangle centre, nodes outside it held at ``c``) or ``"expression id"`` with
an id of :py:data:`~deadcore.solver.problem.BoundaryExpressions`.
"""
# ******************************************************************************
import os
from enum import auto
from pathlib import Path
from typing import Any, Literal, Optional, Union

import orjson
from pydantic import (BaseModel, Field, NonNegativeFloat, PositiveFloat, PositiveInt, ValidationError,
                      field_validator, model_validator)
from strenum import StrEnum

from deadcore.core.field import ScalarField
from deadcore.core.grid import BallSpec, makeGrid
from deadcore.core.params import CriticalGammaValue, Params, Scheme
from deadcore.exceptions import ConfigError, GridMismatch
from deadcore.misc.utils import configHash
from deadcore.solver.problem import BoundaryExpressions, Problem
from deadcore.verify.suites import SuiteConfig


# ******************************************************************************
class Command(StrEnum):
    """Sub-commands of ``deadcore``"""
    solve = auto()
    radial = auto()
    fbanalyze = auto()
    verify = auto()
    sweep = auto()


class OutputFormat(StrEnum):
    csv = auto()
    json = auto()


class BoundaryKind(StrEnum):
    constant = auto()
    ball = auto()
    expression = auto()


class SweepVariable(StrEnum):
    Lambda = 'lambda'
    Gamma = 'gamma'


# ******************************************************************************
def parseBoundary(text: str) -> tuple[BoundaryKind, list[Any]]:
    """Split ``"constant c"``, ``"ball R,c"`` or ``"expression id"`` into kind and arguments

    Raises:
        ValueError: for malformed text.
    """
    kind, _, rest = text.strip().partition(' ')
    try:
        kind = BoundaryKind(kind)
    except ValueError:
        raise ValueError(f'Unknown boundary kind "{kind}" ({"|".join(BoundaryKind)})') from None
    rest = rest.strip()
    if kind == BoundaryKind.expression:
        if rest not in BoundaryExpressions:
            raise ValueError(f'Unknown boundary expression "{rest}" ({"|".join(BoundaryExpressions)})')
        return kind, [rest]

    values = [float(v) for v in rest.split(',') if v.strip()]
    expected = 2 if kind == BoundaryKind.ball else 1
    if len(values) != expected:
        raise ValueError(f'"{kind}" boundary takes {expected} number(s), got "{rest}"')
    if any(v < 0 for v in values) or (kind == BoundaryKind.ball and values[0] <= 0):
        raise ValueError(f'Boundary numbers must be nonnegative (and R positive), got "{rest}"')
    return kind, values


# ******************************************************************************
class ProblemSpec(BaseModel):
    """Dirichlet problem as read from a problem file"""
    origin: tuple[float, float] = (0.0, 0.0)
    extent: tuple[PositiveFloat, PositiveFloat] = (1.0, 1.0)
    resolution: Union[PositiveInt, tuple[PositiveInt, PositiveInt]] = 129
    gamma: NonNegativeFloat = Field(default=1.0, le=CriticalGammaValue)
    lam: Union[NonNegativeFloat, Literal['field']] = Field(default=1.0, alias='lambda')
    lambdaCsv: Optional[Path] = Field(default=None, alias='lambda_csv')
    boundary: str = 'constant 1'
    scheme: Optional[Scheme] = None
    tolUpdate: Optional[PositiveFloat] = Field(default=None, alias='tol_update')
    tolResidual: Optional[PositiveFloat] = Field(default=None, alias='tol_residual')
    maxSweeps: Optional[PositiveInt] = Field(default=None, alias='max_sweeps')
    deltaPlateau: Optional[NonNegativeFloat] = Field(default=None, alias='delta_plateau')

    class Config:
        use_enum_values = True
        populate_by_name = True
        extra = 'forbid'

    # **************************************************************************
    @field_validator('boundary')
    @classmethod
    def _validBoundary(cls, value: str) -> str:
        parseBoundary(value)
        return value

    @model_validator(mode='after')
    def _lambdaField(self) -> 'ProblemSpec':
        if self.lam == 'field' and self.lambdaCsv is None:
            raise ValueError('"lambda": "field" needs "lambda_csv"')
        return self

    # **************************************************************************
    @property
    def shape(self) -> tuple[int, int]:
        if isinstance(self.resolution, int):
            return self.resolution, self.resolution
        return self.resolution

    @property
    def center(self) -> tuple[float, float]:
        return self.origin[0] + 0.5 * self.extent[0], self.origin[1] + 0.5 * self.extent[1]


# ******************************************************************************
class RadialSpec(BaseModel):
    lam: PositiveFloat = Field(default=1.0, alias='lambda')
    gamma: NonNegativeFloat = Field(default=1.0, lt=CriticalGammaValue)
    c: PositiveFloat = 1.0
    R: PositiveFloat = 1.0
    points: PositiveInt = Field(default=257, ge=2)

    class Config:
        populate_by_name = True
        extra = 'forbid'


# ******************************************************************************
class AnalysisSpec(BaseModel):
    field: Path
    gamma: NonNegativeFloat = Field(default=1.0, lt=CriticalGammaValue)
    deltaPlateau: Optional[NonNegativeFloat] = Field(default=None, alias='delta_plateau')
    anchors: Optional[PositiveInt] = None

    class Config:
        populate_by_name = True
        extra = 'forbid'


# ******************************************************************************
class SweepSpec(BaseModel):
    """Parameter sweep over ``lambda`` or ``gamma``; the other coefficients stay fixed"""
    vary: SweepVariable
    start: float = Field(alias='from')
    stop: float = Field(alias='to')
    points: int = Field(ge=2)
    lam: PositiveFloat = Field(default=1.0, alias='lambda')
    gamma: NonNegativeFloat = Field(default=1.0, lt=CriticalGammaValue)
    c: PositiveFloat = 1.0
    R: PositiveFloat = 1.0
    solve: bool = False
    resolution: PositiveInt = Field(default=65, ge=5)
    tolUpdate: Optional[PositiveFloat] = Field(default=None, alias='tol_update')

    class Config:
        use_enum_values = True
        populate_by_name = True
        extra = 'forbid'

    # **************************************************************************
    @model_validator(mode='after')
    def _validRange(self) -> 'SweepSpec':
        low, high = sorted((self.start, self.stop))
        if low == high:
            raise ValueError('sweep range is empty')
        if self.vary == SweepVariable.Gamma and not (0 <= low and high < CriticalGammaValue):
            raise ValueError(f'gamma must stay in [0, 3), got [{low:g}, {high:g}]')
        if self.vary == SweepVariable.Lambda and low <= 0:
            raise ValueError(f'lambda must stay positive, got [{low:g}, {high:g}]')
        return self


# ******************************************************************************
class RunConfig(BaseModel):
    """Everything one ``deadcore`` invocation needs"""
    command: Command
    problem: Optional[ProblemSpec] = None
    radial: Optional[RadialSpec] = None
    analysis: Optional[AnalysisSpec] = None
    suite: Optional[SuiteConfig] = None
    sweep: Optional[SweepSpec] = None
    output: Path = Path('.')
    formats: list[OutputFormat] = Field(default_factory=lambda: [OutputFormat.csv, OutputFormat.json])
    allowInconclusive: bool = Field(default=False, alias='allow_inconclusive')

    class Config:
        use_enum_values = True
        populate_by_name = True

    # **************************************************************************
    @field_validator('output')
    @classmethod
    def _writable(cls, value: Path) -> Path:
        existing = value
        while not existing.exists() and existing != existing.parent:
            existing = existing.parent
        if not (existing.is_dir() and os.access(existing, os.W_OK)):
            raise ValueError(f'output directory {value} is not writable')
        return value

    @model_validator(mode='after')
    def _sectionPresent(self) -> 'RunConfig':
        section = {Command.solve: self.problem, Command.radial: self.radial, Command.fbanalyze: self.analysis,
                   Command.verify: self.suite, Command.sweep: self.sweep}[Command(self.command)]
        if section is None:
            raise ValueError(f'"{self.command}" needs its configuration section')
        return self

    # **************************************************************************
    def wants(self, fmt: OutputFormat) -> bool:
        return fmt in self.formats

    def hash(self) -> str:
        """Hash of the run, independent of where the outputs go"""
        return configHash(self.model_dump(mode='json', by_alias=True, exclude={'output'}))


# ******************************************************************************
def readConfigFile(jsonFile: Path) -> dict[str, Any]:
    """Decode a JSON configuration file

    Raises:
        ConfigError: if the file cannot be read or is not a JSON object.
    """
    try:
        data = orjson.loads(jsonFile.read_bytes())
    except (OSError, orjson.JSONDecodeError) as e:
        raise ConfigError(f'Cannot read configuration {jsonFile}: {e}') from e
    if not isinstance(data, dict):
        raise ConfigError(f'Configuration {jsonFile} must hold a JSON object')
    return data


# ******************************************************************************
def makeRunConfig(data: dict[str, Any]) -> RunConfig:
    """Validate a merged configuration dictionary

    Raises:
        ConfigError: wrapping the validation errors.
    """
    try:
        return RunConfig.model_validate(data)
    except ValidationError as ve:
        messages = '; '.join(f'{".".join(str(p) for p in e["loc"])}: {e["msg"]}' for e in ve.errors())
        raise ConfigError(f'Invalid configuration: {messages}') from ve


# ******************************************************************************
def buildProblem(spec: ProblemSpec, defaultTolUpdate: float, defaultScheme: Scheme | str) -> Problem:
    """Grid, coefficients and data of a problem file

    Raises:
        ConfigError: if the lambda field does not match the grid or the data are negative.
    """
    grid = makeGrid(spec.origin, spec.extent, spec.shape)
    lam: float | ScalarField
    if spec.lam == 'field':
        lam = ScalarField.fromCsv(spec.lambdaCsv)
        if not lam.grid.sameAs(grid):
            raise ConfigError(f'lambda field {spec.lambdaCsv} does not live on the problem grid')
    else:
        lam = float(spec.lam)

    try:
        params = Params(gamma=spec.gamma, lam=lam, scheme=spec.scheme or defaultScheme,
                        tolUpdate=spec.tolUpdate or defaultTolUpdate, tolResidual=spec.tolResidual,
                        maxSweeps=spec.maxSweeps)
        kind, args = parseBoundary(spec.boundary)
        if kind == BoundaryKind.constant:
            return Problem.constant(grid, args[0], params)
        if kind == BoundaryKind.ball:
            return Problem.onBall(grid, BallSpec(center=spec.center, radius=args[0]), args[1], params)
        return Problem.fromFunction(grid, BoundaryExpressions[args[0]], params)
    except (ValueError, GridMismatch) as e:
        raise ConfigError(f'Invalid problem: {e}') from e


# ******************************************************************************
def overrideBoundary(boundary: str, c: Optional[float], R: Optional[float]) -> str:
    """Apply ``--c`` and ``--R`` to a boundary description.

    ``--R`` turns constant data into a ball; ``--c`` replaces the level of
    constant and ball data and is ignored for expressions.
    """
    kind, args = parseBoundary(boundary)
    if kind == BoundaryKind.expression:
        return boundary
    level = args[-1] if c is None else c
    if kind == BoundaryKind.ball or R is not None:
        radius = args[0] if R is None else R
        return f'ball {radius!r},{level!r}'
    return f'constant {level!r}'


# ******************************************************************************
