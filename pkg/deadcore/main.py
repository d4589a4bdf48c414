# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Entry point of the ``deadcore`` command.

:py:func:`main` parses the command line, sets up logging (INFO on stdout,
warnings on stderr, a rotating log file under
:py:attr:`~deadcore.constants.RConstants.DataPath`), loads the preferences and
hands over to :py:func:`~deadcore.cli.commands.run`.
"""
# ******************************************************************************
from __future__ import annotations

import logging
import logging.config
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from deadcore.cli.commands import configFromArgs, createParser, run
from deadcore.constants import Rx
from deadcore.exceptions import ConfigError
from deadcore.misc.utils import elapsedText, slugify
from deadcore.settings import RSettings

# ******************************************************************************
RuntimeLevel: int = 99


# ******************************************************************************
class _BelowWarning(logging.Filter):
    """Keeps warnings and errors off stdout; stderr carries them"""
    def filter(self, record: logging.LogRecord) -> bool:
        return record.levelno < logging.WARNING


# ******************************************************************************
def _loggingConfig(logFile: Path) -> dict:
    return {
        'version': 1,
        'disable_existing_loggers': False,
        'filters': {
            'belowWarning': {'()': _BelowWarning},
        },
        'formatters': {
            'simple': {
                'format': '[{levelname}] {message}',
                'style': '{',
            },
            'detailed': {
                'format': '{asctime} [{levelname}] {message}',
                'datefmt': '%Y-%b-%dT%H:%M:%S%z',
                'style': '{',
            },
            'debuggingDetail': {
                'format': '{asctime} [{levelname}] {module}.{funcName}[{lineno}]: {message}',
                'datefmt': '%Y-%b-%dT%H:%M:%S%z',
                'style': '{',
            },
        },
        'handlers': {
            'stdout': {
                'class': 'logging.StreamHandler',
                'level': 'INFO',
                'formatter': 'simple',
                'filters': ['belowWarning'],
                'stream': 'ext://sys.stdout',
            },
            'stderr': {
                'class': 'logging.StreamHandler',
                'level': 'WARNING',
                'formatter': 'detailed',
                'stream': 'ext://sys.stderr',
            },
            'file': {
                'class': 'logging.handlers.RotatingFileHandler',
                'filename': str(logFile),
                'level': 'NOTSET',
                'formatter': 'debuggingDetail',
                'maxBytes': 1_048_576,  # 1 MiB
                'backupCount': 10,
                'encoding': 'utf-8',
            },
        },
        'loggers': {
            'root': {
                'level': 'NOTSET',
                'handlers': ['file', 'stdout', 'stderr'],
            },
            'numba': {
                'level': 'WARNING'
            },
        },
    }


def _createLogger(dataPath: Path) -> logging.Logger:
    """Configure logging and return the application logger"""
    logFile = dataPath / f'{slugify(Rx.ApplicationName)}.log'
    logging.config.dictConfig(_loggingConfig(logFile))
    logging.addLevelName(RuntimeLevel, 'RUNTIME')
    return logging.getLogger(Rx.ApplicationName)


# ******************************************************************************
def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse the command line, run the command and return its exit status"""
    args = createParser().parse_args(argv)
    logger = _createLogger(Rx.DataPath)
    settings = RSettings()
    logger.setLevel('DEBUG' if args.verbose else 'WARNING' if args.quiet else str(settings.Main.LogLevel))
    logger.log(RuntimeLevel, f'{Rx.ApplicationName} {Rx.ApplicationVersion!r}: {args.command}')

    startTime = time.perf_counter()
    try:
        config = configFromArgs(args, settings)
    except ConfigError as e:
        logger.error(str(e))
        return Rx.ExitConfigError

    status = run(config, settings)
    logger.log(RuntimeLevel, f'{args.command} finished with status {status} '
                             f'({elapsedText(time.perf_counter() - startTime)})')
    return status


# ******************************************************************************
if __name__ == '__main__':
    sys.exit(main())
