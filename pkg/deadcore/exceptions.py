# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Exceptions raised by the DeadCore modules.

All exceptions derive from :py:class:`DeadCoreException` so that callers (the
command line front end in particular) can separate domain failures from
programming errors.
"""
# ******************************************************************************
from typing import Any


# ******************************************************************************
class DeadCoreException(Exception):
    pass


# ******************************************************************************
class InvalidParams(DeadCoreException):
    """Problem coefficients or tolerances violate their invariants"""
    pass


class ConfigError(DeadCoreException):
    """Run configuration could not be read or validated"""
    pass


# ******************************************************************************
# core
class NonSquareCells(DeadCoreException):
    pass


class TooCoarse(DeadCoreException):
    pass


class NonFiniteSample(DeadCoreException):
    pass


class GridMismatch(DeadCoreException):
    pass


# ******************************************************************************
# analytic
class CriticalGamma(DeadCoreException):
    """The exponent reached the critical value 3 where the radial family degenerates"""
    pass


class SingularPoint(DeadCoreException):
    pass


# ******************************************************************************
# operator
class BoundaryNode(DeadCoreException):
    pass


class OutOfHull(DeadCoreException):
    pass


# ******************************************************************************
# solver
class BracketFailure(DeadCoreException):
    """The scalar node equation has no sign change over its bracket.

    The monotone scheme guarantees opposite signs at the bracket ends, so this
    points at a broken operator rather than at bad input.
    """
    def __init__(self, node: tuple[int, int], lowResidual: float, highResidual: float):
        super().__init__(f'No sign change at node {node}: '
                         f'residuals {lowResidual:.6g} and {highResidual:.6g}')
        self.node = node
        self.lowResidual = lowResidual
        self.highResidual = highResidual


class NotConverged(DeadCoreException):
    """Sweeps exhausted before either stopping criterion was met.

    Attributes:
        field: best iterate reached (a :py:class:`~deadcore.core.field.ScalarField`)
        report: the :py:class:`~deadcore.solver.problem.SolveReport` of the run
    """
    def __init__(self, message: str, field: Any = None, report: Any = None):
        super().__init__(message)
        self.field = field
        self.report = report


# ******************************************************************************
# fbgeom
class EmptyBall(DeadCoreException):
    pass


class InsufficientData(DeadCoreException):
    pass


class ZeroSamples(DeadCoreException):
    """All sampled sups vanish, the anchor lies deep inside the plateau"""
    pass


class EmptyBoundary(DeadCoreException):
    pass


class ScaleUnderResolved(DeadCoreException):
    pass


# ******************************************************************************
