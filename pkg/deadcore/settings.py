# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""User preferences of DeadCore, kept in ``deadcore.toml``.

The file is read through a confz loader into the :py:class:`RSettings`
sections. Missing sections and invalid values fall back to their defaults
with a warning, and a missing file is written with every default. The worker
count can be overridden with the ``DEADCORE_THREADS`` environment variable.
"""
# ******************************************************************************
import logging
import os
from dataclasses import dataclass
from enum import auto
from pathlib import Path
from typing import Optional

import tomlkit
from confz import BaseConfig, ConfigSource
from confz.loaders import Loader, register_loader
from pydantic import BaseModel, Field, NonNegativeInt, PositiveFloat, PositiveInt, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict
from strenum import StrEnum
from tomlkit.exceptions import TOMLKitError

from deadcore.constants import Rx
from deadcore.core.params import DefaultTolUpdate, Scheme as Schemes


# ******************************************************************************
class LogLevels(StrEnum):
    """Python log levels"""
    CRITICAL = auto()
    WARNING = auto()
    INFO = auto()
    DEBUG = auto()


# ******************************************************************************
class MainConfig(BaseModel):
    """Main configuration options"""
    LogLevel: LogLevels = Field(
        default=LogLevels.INFO,
        description="Verbosity of the log output "
                    f"({'|'.join([e for e in LogLevels])}). Default is INFO"
    )


# ******************************************************************************
class SolverConfig(BaseModel):
    """Solver defaults, overridden by problem files and command-line flags"""
    Scheme: Schemes = Field(
        default=Schemes.MinMaxStencil,
        description="Discretization used for reported residuals "
                    f"({'|'.join([e for e in Schemes])}). Default is minmax"
    )
    TolUpdate: PositiveFloat = Field(
        default=DefaultTolUpdate,
        description="Stopping tolerance on the distance to the discrete solution. Default is 1e-10"
    )
    ResidualInterval: PositiveInt = Field(
        default=10,
        description="Sweeps between two residual evaluations. Default is 10"
    )
    Threads: NonNegativeInt = Field(
        default=0,
        description="Worker threads of the parallel sweeps, 0 for all available. Default is 0"
    )
    ShowProgress: bool = Field(
        default=False,
        description="Show a progress bar over the sweeps. Default is false"
    )


# ******************************************************************************
class AnalysisConfig(BaseModel):
    """Free-boundary analysis defaults"""
    DeltaPlateauFactor: PositiveFloat = Field(
        default=100.0,
        description="Plateau threshold as a multiple of TolUpdate. Default is 100"
    )
    AnchorCount: PositiveInt = Field(
        default=8,
        le=64,
        description="Number of free-boundary anchors of the growth fit [1 - 64]. Default is 8"
    )


SECTIONS: dict[str, type[BaseModel]] = {
    'Main': MainConfig,
    'Solver': SolverConfig,
    'Analysis': AnalysisConfig,
}


CONFIG_FILENAME: str = 'deadcore.toml'
"""Preferences file under :py:attr:`~deadcore.constants.RConstants.ConfigPath`"""


# ******************************************************************************
def _createSection(model: type[BaseModel]) -> tomlkit.items.Table:
    """Table of a section's defaults, each preceded by its description"""
    section = tomlkit.table()
    for fieldName, fieldInfo in model.model_fields.items():
        section.add(tomlkit.comment(fieldInfo.description or fieldName))
        section.add(fieldName, fieldInfo.default)
        section.add(tomlkit.nl())
    return section


def _createConfigToml() -> tomlkit.TOMLDocument:
    """Preferences document holding the defaults of every section"""
    tdoc = tomlkit.TOMLDocument()
    rule = tomlkit.comment('*' * 78)
    tdoc.add(rule)
    tdoc.add(tomlkit.comment(f'{Rx.ApplicationName} preferences, version {Rx.ApplicationVersion!s}'))
    tdoc.add(tomlkit.comment('Problem files and command-line flags take precedence over these values'))
    tdoc.add(tomlkit.nl())
    for sectionName, model in SECTIONS.items():
        tdoc[sectionName] = _createSection(model)
    tdoc.add(rule)
    return tdoc


# ******************************************************************************
def _validateSection(tdoc: tomlkit.TOMLDocument, sectionName: str, model: type[BaseModel]) -> BaseModel:
    """Validate one section; invalid fields fall back to their defaults, unknown ones are dropped"""
    log = logging.getLogger(Rx.ApplicationName)
    try:
        return model.model_validate(tdoc[sectionName])
    except ValidationError as ve:
        log.warning(f'[{sectionName}] has {ve.error_count()} invalid value(s)')
        table = tdoc[sectionName]
        for error in ve.errors():
            key = error['loc'][0]
            log.warning(f'[{sectionName}] {key}={error.get("input")!r}: {error["msg"]}')
            if key in model.model_fields:
                table[key] = model.model_fields[key].default
            elif key in table:
                del table[key]
        return model.model_validate(table)


def _readPreferences(tomlFile: Path) -> tomlkit.TOMLDocument:
    """Parse the preferences, writing the defaults first when the file is missing"""
    log = logging.getLogger(Rx.ApplicationName)
    if not tomlFile.is_file():
        log.info(f'Writing default preferences to {tomlFile}')
        tomlFile.write_text(tomlkit.dumps(_createConfigToml()), encoding='utf-8')
    try:
        return tomlkit.loads(tomlFile.read_text(encoding='utf-8'))
    except (OSError, TOMLKitError) as e:
        log.warning(f'Unreadable preferences {tomlFile}, using defaults: {e!s}')
        return _createConfigToml()


# ******************************************************************************
@dataclass
class TomlSource(ConfigSource):
    tomlFile: Path


class TomlLoader(Loader):
    """confz loader of the sectioned preferences file"""
    @classmethod
    def populate_config(cls, config: dict, tomlSource: TomlSource):
        tdoc = _readPreferences(tomlSource.tomlFile)
        sections = {}
        for sectionName, model in SECTIONS.items():
            if sectionName not in tdoc:
                logging.getLogger(Rx.ApplicationName).warning(f'[{sectionName}] missing, using defaults')
                tdoc[sectionName] = _createSection(model)
            sections[sectionName] = _validateSection(tdoc, sectionName, model)
        cls.update_dict_recursively(config, sections)


register_loader(TomlSource, TomlLoader)


# ******************************************************************************
class ThreadsEnvironment(BaseSettings):
    """``DEADCORE_THREADS`` worker-count override"""
    model_config = SettingsConfigDict(env_prefix='DEADCORE_')

    threads: Optional[NonNegativeInt] = None


# ******************************************************************************
class RSettings(BaseConfig):
    """Preferences of the ``deadcore`` command, loaded once per run"""
    Main: MainConfig
    Solver: SolverConfig
    Analysis: AnalysisConfig

    CONFIG_SOURCES = TomlSource(tomlFile=Rx.ConfigPath / CONFIG_FILENAME)

    class Config:
        use_enum_values = True
        frozen = False

    # **************************************************************************
    def threads(self) -> int:
        """Worker count: ``DEADCORE_THREADS``, else ``Solver.Threads``; 0 means all available"""
        override = ThreadsEnvironment().threads
        count = self.Solver.Threads if override is None else override
        return count if count > 0 else (os.cpu_count() or 1)

# ******************************************************************************
