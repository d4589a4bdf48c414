# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Application wide constants: name, version, exit statuses and user folders"""
# ******************************************************************************
import os
import platform
from pathlib import Path
from typing import NamedTuple


# ******************************************************************************
class RVersion(NamedTuple):
    """Release number; ``str`` gives ``major.minor``, ``repr`` the full release"""
    major: int = 0
    minor: int = 0
    patch: int = 0
    phase: str = ''

    def __repr__(self) -> str:
        suffix = f' ({self.phase})' if self.phase else ''
        return f'{self.major}.{self.minor}.{self.patch}{suffix}'

    def __str__(self) -> str:
        return f'{self.major}.{self.minor}'


# ******************************************************************************
def _userFolder(appName: str, version: RVersion, xdgVariable: str) -> Path:
    """Per-version user folder, created on first use

    ``%LOCALAPPDATA%`` on Windows, the home folder on macOS, else the given XDG
    variable falling back to home.
    """
    base = Path.home()
    system = platform.system()
    if system == 'Windows':
        base = Path(os.environ.get('LOCALAPPDATA', base))
    elif system != 'Darwin' and xdgVariable in os.environ:
        base = Path(os.environ[xdgVariable])
    folder = base / f'.{appName}' / str(version)
    folder.mkdir(parents=True, exist_ok=True)
    return folder


# ******************************************************************************
class RConstants:
    """Global constants, read through the :py:data:`Rx` instance"""
    _dataPath: Path | None = None
    _configPath: Path | None = None

    @property
    def ApplicationName(self) -> str:
        """Usable as file and folder name"""
        return 'DeadCore'

    @property
    def ApplicationVersion(self) -> RVersion:
        return RVersion(major=0, minor=1, patch=0, phase='Alpha')

    # Exit statuses of the command line
    @property
    def ExitSuccess(self) -> int:
        return 0

    @property
    def ExitFailed(self) -> int:
        """At least one experiment failed"""
        return 1

    @property
    def ExitConfigError(self) -> int:
        """Invalid configuration, input file or parameters"""
        return 2

    @property
    def ExitNotConverged(self) -> int:
        """A solve exhausted its sweeps"""
        return 3

    @property
    def DataPath(self) -> Path:
        """Folder for the log file"""
        if self._dataPath is None:
            self._dataPath = _userFolder(self.ApplicationName, self.ApplicationVersion, 'XDG_DATA_HOME')
        return self._dataPath

    @property
    def ConfigPath(self) -> Path:
        """Folder holding ``deadcore.toml``"""
        if self._configPath is None:
            self._configPath = _userFolder(self.ApplicationName, self.ApplicationVersion, 'XDG_CONFIG_HOME')
        return self._configPath


# ******************************************************************************
Rx = RConstants()

# ******************************************************************************
