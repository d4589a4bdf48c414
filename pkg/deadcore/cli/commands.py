# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Sub-commands of ``deadcore``.

Every command writes its outputs into the output directory and returns the
process exit status: 0 success, 1 failed experiments, 2 configuration
errors, 3 solver non-convergence. Plot data are written as CSV; nothing is
rendered.
"""
# ******************************************************************************
import argparse
import logging
from pathlib import Path
from typing import Any, Callable, Optional

import numba
import numpy as np

from deadcore.analytic.radial import evalRadial, makeRadial
from deadcore.cli.config import (Command, OutputFormat, RunConfig, SweepVariable, buildProblem, makeRunConfig,
                                 overrideBoundary, readConfigFile)
from deadcore.constants import Rx
from deadcore.core.field import ScalarField
from deadcore.core.params import Params, Scheme
from deadcore.exceptions import ConfigError, DeadCoreException, NotConverged
from deadcore.fbgeom.report import analyzeFreeBoundary
from deadcore.misc.utils import canonicalJson, formatNumber
from deadcore.operator.residual import residualField
from deadcore.settings import RSettings
from deadcore.solver.problem import SolveReport, ballProblem
from deadcore.solver.solver import solve
from deadcore.verify.report import allPassed, writeReports
from deadcore.verify.suites import Suite, runSuite

# ******************************************************************************
FieldFile: str = 'field.csv'
ResidualFile: str = 'residual.csv'
SolveReportFile: str = 'solve_report.json'
ProfileFile: str = 'radial_profile.csv'
RadialFile: str = 'radial.json'
FreeBoundaryFile: str = 'free_boundary.json'
GrowthFile: str = 'growth.csv'
VerifyFile: str = 'verify.jsonl'
SweepCsvFile: str = 'sweep.csv'
SweepJsonFile: str = 'sweep.json'

SectionKeys: dict[Command, str] = {
    Command.solve: 'problem',
    Command.radial: 'radial',
    Command.fbanalyze: 'analysis',
    Command.verify: 'suite',
    Command.sweep: 'sweep',
}

_FlagKeys: dict[Command, dict[str, str]] = {
    Command.solve: {'gamma': 'gamma', 'lam': 'lambda', 'lambda_csv': 'lambda_csv', 'resolution': 'resolution',
                    'scheme': 'scheme', 'tol_update': 'tol_update', 'tol_residual': 'tol_residual',
                    'max_sweeps': 'max_sweeps', 'delta_plateau': 'delta_plateau', 'boundary': 'boundary'},
    Command.radial: {'lam': 'lambda', 'gamma': 'gamma', 'c': 'c', 'R': 'R', 'points': 'points'},
    Command.fbanalyze: {'field': 'field', 'gamma': 'gamma', 'delta_plateau': 'delta_plateau',
                        'anchors': 'anchors'},
    Command.verify: {'suite': 'suite', 'lam': 'lambda', 'c': 'c', 'R': 'R', 'resolution': 'resolution',
                     'tol_update': 'tol_update', 'max_sweeps': 'max_sweeps'},
    Command.sweep: {'vary': 'vary', 'start': 'from', 'stop': 'to', 'points': 'points', 'gamma': 'gamma',
                    'lam': 'lambda', 'c': 'c', 'R': 'R', 'solve': 'solve', 'resolution': 'resolution',
                    'tol_update': 'tol_update'},
}


# ******************************************************************************
def _lambdaArgument(text: str) -> float | str:
    if text == 'field':
        return text
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected a number or "field", got "{text}"') from None


# ******************************************************************************
def createParser() -> argparse.ArgumentParser:
    """Argument parser of the ``deadcore`` command"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=Path, help='JSON configuration file')
    common.add_argument('--output', type=Path, help='output directory (default: current directory)')
    common.add_argument('--format', dest='formats', action='append', choices=[str(f) for f in OutputFormat],
                        help='output format, repeatable (default: csv and json)')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='log debugging detail')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='log warnings and errors only')

    parser = argparse.ArgumentParser(prog='deadcore', description='Dead-core solutions of the infinity Laplacian '
                                                                  'with strong absorption')
    parser.add_argument('--version', action='version', version=f'%(prog)s {Rx.ApplicationVersion!s}')
    commands = parser.add_subparsers(dest='command', required=True)

    # Solve
    p = commands.add_parser(Command.solve, parents=[common], help='solve one Dirichlet problem')
    p.add_argument('--gamma', type=float)
    p.add_argument('--lambda', dest='lam', type=_lambdaArgument, help='number, or "field" with --lambda-csv')
    p.add_argument('--lambda-csv', type=Path)
    p.add_argument('--c', type=float, help='boundary level')
    p.add_argument('--R', type=float, help='ball radius; the domain becomes the square around the ball')
    p.add_argument('--boundary', help='"constant c", "ball R,c" or "expression id"')
    p.add_argument('--resolution', type=int, help='nodes per side')
    p.add_argument('--scheme', choices=[str(s) for s in Scheme])
    p.add_argument('--tol-update', type=float)
    p.add_argument('--tol-residual', type=float)
    p.add_argument('--max-sweeps', type=int)
    p.add_argument('--delta-plateau', type=float)

    # Radial
    p = commands.add_parser(Command.radial, parents=[common], help='exact radial solution')
    p.add_argument('--lambda', dest='lam', type=float)
    p.add_argument('--gamma', type=float)
    p.add_argument('--c', type=float)
    p.add_argument('--R', type=float)
    p.add_argument('--resolution', '--points', dest='points', type=int, help='profile samples')

    # Free boundary analysis
    p = commands.add_parser(Command.fbanalyze, parents=[common], help='free-boundary geometry of a field CSV')
    p.add_argument('--field', type=Path, help='field CSV written by "solve"')
    p.add_argument('--gamma', type=float)
    p.add_argument('--delta-plateau', type=float)
    p.add_argument('--anchors', type=int)

    # Verify
    p = commands.add_parser(Command.verify, parents=[common], help='run an experiment suite')
    p.add_argument('--suite', choices=[str(s) for s in Suite])
    p.add_argument('--allow-inconclusive', action='store_true', default=None)
    p.add_argument('--lambda', dest='lam', type=float)
    p.add_argument('--c', type=float)
    p.add_argument('--R', type=float)
    p.add_argument('--resolution', type=int, help='nodes per side of the ball problems')
    p.add_argument('--tol-update', type=float)
    p.add_argument('--max-sweeps', type=int)

    # Sweep
    p = commands.add_parser(Command.sweep, parents=[common], help='vary lambda or gamma over a range')
    p.add_argument('--vary', choices=[str(v) for v in SweepVariable])
    p.add_argument('--from', dest='start', type=float)
    p.add_argument('--to', dest='stop', type=float)
    p.add_argument('--points', type=int)
    p.add_argument('--gamma', type=float)
    p.add_argument('--lambda', dest='lam', type=float)
    p.add_argument('--c', type=float)
    p.add_argument('--R', type=float)
    p.add_argument('--solve', action='store_true', default=None, help='also solve the ball problem per point')
    p.add_argument('--resolution', type=int, help='nodes per side of the solved ball problems')
    p.add_argument('--tol-update', type=float)

    return parser


# ******************************************************************************
def configFromArgs(args: argparse.Namespace, settings: RSettings) -> RunConfig:
    """Merge flags, the JSON configuration file and the preferences into a :py:class:`RunConfig`.

    The JSON file is either a whole run configuration or just the section of
    the command (e.g. a problem file for ``solve``).

    Raises:
        ConfigError: for unreadable or invalid configuration.
    """
    command = Command(args.command)
    key = SectionKeys[command]
    data: dict[str, Any] = readConfigFile(args.config) if args.config else {}
    if key not in data and not ({'output', 'formats', 'command'} & data.keys()):
        data = {key: data}
    data['command'] = str(command)
    section: dict[str, Any] = dict(data.get(key) or {})

    for attribute, name in _FlagKeys[command].items():
        value = getattr(args, attribute, None)
        if value is not None:
            section[name] = str(value) if isinstance(value, Path) else value

    if command == Command.solve:
        c, R = getattr(args, 'c', None), getattr(args, 'R', None)
        if c is not None or R is not None:
            try:
                section['boundary'] = overrideBoundary(section.get('boundary', 'constant 1'), c, R)
            except ValueError as e:
                raise ConfigError(str(e)) from e
            if R is not None and 'extent' not in section:
                section['origin'] = [-R, -R]
                section['extent'] = [2.0 * R, 2.0 * R]
        section.setdefault('scheme', str(settings.Solver.Scheme))
        section.setdefault('tol_update', settings.Solver.TolUpdate)
    elif command == Command.verify:
        section.setdefault('tol_update', settings.Solver.TolUpdate)
    elif command == Command.fbanalyze:
        section.setdefault('anchors', settings.Analysis.AnchorCount)
        section.setdefault('delta_plateau', settings.Analysis.DeltaPlateauFactor * settings.Solver.TolUpdate)

    data[key] = section
    if args.output is not None:
        data['output'] = str(args.output)
    if args.formats:
        data['formats'] = sorted(set(args.formats))
    if getattr(args, 'allow_inconclusive', None):
        data['allow_inconclusive'] = True
    return makeRunConfig(data)


# ******************************************************************************
def _writeJson(jsonFile: Path, obj: Any, hashValue: str) -> None:
    jsonFile.write_bytes(canonicalJson({**obj, 'config_hash': hashValue}, indent=True) + b'\n')


def _writeCsv(csvFile: Path, header: list[str], rows: list[list[Any]]) -> None:
    with csvFile.open('w', encoding='utf-8', newline='\n') as f:
        f.write(','.join(header) + '\n')
        for row in rows:
            f.write(','.join(_csvValue(v) for v in row) + '\n')


def _csvValue(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return formatNumber(value)


# ******************************************************************************
def runSolve(config: RunConfig, settings: RSettings) -> int:
    logger = logging.getLogger(Rx.ApplicationName)
    spec = config.problem
    problem = buildProblem(spec, settings.Solver.TolUpdate, settings.Solver.Scheme)
    params = problem.params
    delta = (settings.Analysis.DeltaPlateauFactor * params.tolUpdate
             if spec.deltaPlateau is None else spec.deltaPlateau)

    status = Rx.ExitSuccess
    try:
        field, report = solve(problem, critical=params.isCritical, deltaPlateau=delta,
                              residualInterval=settings.Solver.ResidualInterval,
                              progress=settings.Solver.ShowProgress)
    except NotConverged as e:
        logger.error(str(e))
        field, report = e.field, e.report
        status = Rx.ExitNotConverged

    _writeSolveOutputs(config, problem.params, problem.dirichletMask, field, report)
    return status


def _writeSolveOutputs(config: RunConfig, params: Params, fixed: np.ndarray, field: ScalarField,
                       report: SolveReport) -> None:
    if config.wants(OutputFormat.csv):
        field.toCsv(config.output / FieldFile)
        residualField(field, params, fixedMask=fixed).toCsv(config.output / ResidualFile)
    if config.wants(OutputFormat.json):
        _writeJson(config.output / SolveReportFile, report.model_dump(by_alias=True), config.hash())


# ******************************************************************************
def runRadial(config: RunConfig, settings: RSettings) -> int:
    spec = config.radial
    sol = makeRadial((0.0, 0.0), spec.R, spec.c, spec.lam, spec.gamma)
    if config.wants(OutputFormat.csv):
        r = np.linspace(0.0, spec.R, spec.points)
        h = evalRadial(sol, (r, np.zeros_like(r)))
        _writeCsv(config.output / ProfileFile, ['r', 'h'], [[a, b] for a, b in zip(r, h)])
    if config.wants(OutputFormat.json):
        _writeJson(config.output / RadialFile,
                   {'tau': sol.tau, 'T': sol.T, 'r_core': sol.rCore, 'has_dead_core': sol.hasDeadCore,
                    'alpha': sol.alpha, 'lambda': sol.lam, 'gamma': sol.gamma, 'c': sol.c, 'R': sol.R},
                   config.hash())
    logging.getLogger(Rx.ApplicationName).info(f'Radial solution: tau {sol.tau:.6g}, T {sol.T:.6g}, '
                                               f'core radius {sol.rCore:.6g}')
    return Rx.ExitSuccess


# ******************************************************************************
def runFbAnalyze(config: RunConfig, settings: RSettings) -> int:
    spec = config.analysis
    if not spec.field.is_file():
        raise ConfigError(f'Field file does not exist: {spec.field}')
    field = ScalarField.fromCsv(spec.field)
    supCsv = config.output / GrowthFile if config.wants(OutputFormat.csv) else None
    report = analyzeFreeBoundary(field, spec.gamma, spec.deltaPlateau, anchorCount=spec.anchors, supCsv=supCsv)
    if config.wants(OutputFormat.json):
        _writeJson(config.output / FreeBoundaryFile, report.model_dump(by_alias=True), config.hash())
    return Rx.ExitSuccess


# ******************************************************************************
def runVerify(config: RunConfig, settings: RSettings) -> int:
    reports = runSuite(config.suite)
    writeReports(config.output / VerifyFile, reports, config.hash())
    for report in reports:
        if not report.passed:
            state = 'inconclusive' if report.inconclusive else 'failed'
            logging.getLogger(Rx.ApplicationName).warning(f'{report.name} {state}: {report.notes or report.metrics}')
    return Rx.ExitSuccess if allPassed(reports, config.allowInconclusive) else Rx.ExitFailed


# ******************************************************************************
def sweepRows(config: RunConfig, settings: RSettings) -> tuple[list[str], list[list[Any]], bool]:
    """Analytic (and optionally solved) quantities per sweep point, ordered by the varied value"""
    spec = config.sweep
    values = sorted(np.linspace(spec.start, spec.stop, spec.points).tolist())
    header = ['lambda', 'gamma', 'tau', 'T', 'r_core', 'has_dead_core']
    if spec.solve:
        header += ['center_u', 'exact_center_u', 'max_free_u', 'plateau_fraction', 'sweeps', 'converged']

    rows: list[list[Any]] = []
    allConverged = True
    tolUpdate = spec.tolUpdate or settings.Solver.TolUpdate
    for value in values:
        lam, gamma = (value, spec.gamma) if spec.vary == SweepVariable.Lambda else (spec.lam, value)
        sol = makeRadial((0.0, 0.0), spec.R, spec.c, lam, gamma)
        row: list[Any] = [lam, gamma, sol.tau, sol.T, sol.rCore, sol.hasDeadCore]
        if spec.solve:
            problem = ballProblem(spec.R, spec.c, Params(gamma=gamma, lam=lam, tolUpdate=tolUpdate),
                                  spec.resolution)
            field, report = solve(problem, raiseOnFailure=False,
                                  deltaPlateau=settings.Analysis.DeltaPlateauFactor * tolUpdate,
                                  residualInterval=settings.Solver.ResidualInterval)
            allConverged = allConverged and report.converged
            center = problem.grid.nearestNode((0.0, 0.0))
            row += [field[center], evalRadial(sol, (0.0, 0.0)), float(field.values[problem.freeMask].max()),
                    report.plateauFraction, report.sweeps, report.converged]
        rows.append(row)
    return header, rows, allConverged


def runSweep(config: RunConfig, settings: RSettings) -> int:
    header, rows, allConverged = sweepRows(config, settings)
    if config.wants(OutputFormat.csv):
        _writeCsv(config.output / SweepCsvFile, header, rows)
    if config.wants(OutputFormat.json):
        _writeJson(config.output / SweepJsonFile, {'rows': [dict(zip(header, row)) for row in rows]},
                   config.hash())
    return Rx.ExitSuccess if allConverged else Rx.ExitNotConverged


# ******************************************************************************
Runners: dict[Command, Callable[[RunConfig, RSettings], int]] = {
    Command.solve: runSolve,
    Command.radial: runRadial,
    Command.fbanalyze: runFbAnalyze,
    Command.verify: runVerify,
    Command.sweep: runSweep,
}


# ******************************************************************************
def configureThreads(settings: RSettings) -> int:
    """Apply the worker count to the numba thread pool"""
    count = min(settings.threads(), numba.config.NUMBA_NUM_THREADS)
    numba.set_num_threads(count)
    return count


# ******************************************************************************
def run(config: RunConfig, settings: Optional[RSettings] = None) -> int:
    """Execute one configured command and return its exit status"""
    logger = logging.getLogger(Rx.ApplicationName)
    settings = RSettings() if settings is None else settings
    try:
        config.output.mkdir(parents=True, exist_ok=True)
        threads = configureThreads(settings)
        logger.debug(f'{config.command}: {threads} thread(s), output in {config.output}')
        return Runners[Command(config.command)](config, settings)
    except NotConverged as e:
        logger.error(f'Solver did not converge: {e}')
        return Rx.ExitNotConverged
    except (DeadCoreException, OSError) as e:
        logger.error(f'{type(e).__name__}: {e}')
        return Rx.ExitConfigError


# ******************************************************************************
