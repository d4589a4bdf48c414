# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
"""Nodal scalar fields on a :py:class:`~deadcore.core.grid.Grid`.

A field is immutable: its value array is a private read-only copy. Solvers
work on their own copies and wrap the result in a new field.
"""
# ******************************************************************************
import logging
from pathlib import Path
from typing import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from deadcore.constants import Rx
from deadcore.core.grid import Grid, Node, makeGrid
from deadcore.exceptions import GridMismatch, NonFiniteSample
from deadcore.misc.utils import SignificantDigits

# ******************************************************************************
CsvHeader: str = 'x,y,value,is_boundary'
"""Header line of the field CSV format."""

PointFunction = Callable[[float, float], float]


# ******************************************************************************
class ScalarField(object):
    """One real per grid node plus the grid boundary mask.

    Attributes:
        grid (Grid): the lattice the values live on.
        values (numpy.ndarray): read-only ``(nx, ny)`` array, ``values[i, j]``
            is the value at node ``(i, j)``.
        boundaryMask (numpy.ndarray): read-only flags, true exactly on the
            rectangle edge.
    """

    # **************************************************************************
    def __init__(self, grid: Grid, values: ArrayLike):
        assert isinstance(grid, Grid)
        data = np.array(values, dtype=np.float64)
        if data.ndim == 0:
            data = np.full(grid.shape, float(data))
        if data.shape != grid.shape:
            raise GridMismatch(f'Values of shape {data.shape} do not fit grid {grid.shape}')
        if not np.isfinite(data).all():
            bad = np.argwhere(~np.isfinite(data))[0]
            raise NonFiniteSample(f'Non-finite value at node {tuple(int(k) for k in bad)}')

        data.setflags(write=False)
        mask = grid.boundaryMask()
        mask.setflags(write=False)

        self._grid = grid
        self._values = data
        self._boundaryMask = mask

    # **************************************************************************
    @property
    def grid(self) -> Grid:
        return self._grid

    @property
    def values(self) -> NDArray[np.float64]:
        return self._values

    @property
    def boundaryMask(self) -> NDArray[np.bool_]:
        return self._boundaryMask

    # **************************************************************************
    def __getitem__(self, node: Node) -> float:
        return float(self._values[node])

    # **************************************************************************
    def __repr__(self) -> str:
        return (f'ScalarField({self._grid.nx}x{self._grid.ny}, h={self._grid.h:g}, '
                f'range=[{self.min():.6g}, {self.max():.6g}])')

    # **************************************************************************
    def min(self) -> float:
        return float(self._values.min())

    def max(self) -> float:
        return float(self._values.max())

    def supNorm(self) -> float:
        return float(np.abs(self._values).max())

    # **************************************************************************
    def boundaryValues(self) -> NDArray[np.float64]:
        """Values on the rectangle edge"""
        return self._values[self._boundaryMask]

    # **************************************************************************
    def withValues(self, values: ArrayLike) -> 'ScalarField':
        """New field on the same grid"""
        return ScalarField(self._grid, values)

    # **************************************************************************
    def assertSameGrid(self, other: 'ScalarField') -> None:
        """Raise :py:class:`GridMismatch` unless both fields share the lattice"""
        if not self._grid.sameAs(other.grid):
            raise GridMismatch(f'{self._grid.nx}x{self._grid.ny}@{self._grid.origin} vs '
                               f'{other.grid.nx}x{other.grid.ny}@{other.grid.origin}')

    # **************************************************************************
    @classmethod
    def constant(cls, grid: Grid, value: float) -> 'ScalarField':
        return cls(grid, np.full(grid.shape, float(value)))

    # **************************************************************************
    def toCsv(self, csvFile: Path) -> None:
        """Write the field as CSV (rows ordered by j, then i)"""
        assert isinstance(csvFile, Path)
        X, Y = self._grid.meshgrid()
        # transpose so that the C-order ravel runs over i fastest
        table = np.column_stack([
            X.T.ravel(), Y.T.ravel(), self._values.T.ravel(),
            self._boundaryMask.T.ravel().astype(np.int64),
        ])
        fmt = [f'%.{SignificantDigits}g'] * 3 + ['%d']
        np.savetxt(csvFile, table, fmt=fmt, delimiter=',', header=CsvHeader, comments='')
        logging.getLogger(Rx.ApplicationName).debug(f'Field written to {csvFile} ({self._grid.nodeCount} nodes)')

    # **************************************************************************
    @classmethod
    def fromCsv(cls, csvFile: Path) -> 'ScalarField':
        """Read a field written by :py:meth:`toCsv`, rebuilding its grid"""
        assert isinstance(csvFile, Path)
        assert csvFile.is_file(), f'Field file does not exist: {csvFile}'

        with csvFile.open('r', encoding='utf-8') as f:
            header = f.readline().strip()
        if header != CsvHeader:
            raise GridMismatch(f'Unexpected header "{header}" in {csvFile}')

        table = np.loadtxt(csvFile, delimiter=',', skiprows=1, ndmin=2)
        xs = np.unique(table[:, 0])
        ys = np.unique(table[:, 1])
        nx, ny = xs.size, ys.size
        if table.shape[0] != nx * ny:
            raise GridMismatch(f'{table.shape[0]} rows cannot fill a {nx}x{ny} lattice')

        grid = makeGrid((xs[0], ys[0]), (xs[-1] - xs[0], ys[-1] - ys[0]), (nx, ny))
        values = table[:, 2].reshape(ny, nx).T
        return cls(grid, values)


# ******************************************************************************
def sampleFunction(grid: Grid, f: PointFunction) -> ScalarField:
    """Evaluate ``f(x, y)`` at every node.

    ``f`` is first tried on the coordinate arrays (numpy broadcasting); if it
    does not accept arrays it is called node by node. No interpolation is
    involved, so reading a node back returns exactly ``f(node)``.

    Raises:
        NonFiniteSample: if ``f`` returns a non-finite value anywhere.
    """
    X, Y = grid.meshgrid()
    try:
        values = np.asarray(f(X, Y), dtype=np.float64)
        if values.shape != grid.shape:
            values = np.broadcast_to(values, grid.shape).copy()
    except (TypeError, ValueError):
        values = np.empty(grid.shape, dtype=np.float64)
        for i, x in enumerate(grid.xs):
            for j, y in enumerate(grid.ys):
                values[i, j] = float(f(float(x), float(y)))

    if not np.isfinite(values).all():
        bad = tuple(int(k) for k in np.argwhere(~np.isfinite(values))[0])
        raise NonFiniteSample(f'f{grid.position(bad)} is not finite (node {bad})')
    return ScalarField(grid, values)


# ******************************************************************************
