# -*- coding: utf-8 -*-
# ******************************************************************************
# Copyright (c) 2024. All rights reserved.
#
# This work is licensed under the Creative Commons Attribution 4.0 International License.
# To view a copy of this license, visit # http://creativecommons.org/licenses/by/4.0/.
#
# Author:      RoXimn <roximn@rixir.org>
# ******************************************************************************
import numpy as np
import pytest

from deadcore.core.field import ScalarField
from deadcore.core.grid import BallSpec, makeGrid
from deadcore.core.params import Params
from deadcore.exceptions import BoundaryNode, CriticalGamma, GridMismatch, InvalidParams, NotConverged
from deadcore.solver.problem import BoundaryExpressions, Problem, ballGrid, ballProblem
from deadcore.solver.solver import StartFrom, initialBounds, nodeUpdate, solve, solveInfinityHarmonic

# ******************************************************************************
Tol: float = 1e-8
Sweeps: int = 20000


# ******************************************************************************
@pytest.fixture(scope='module')
def grid():
    return makeGrid((0, 0), (1, 1), (33, 33))


def params(gamma: float, lam: float) -> Params:
    return Params(gamma=gamma, lam=lam, tolUpdate=Tol, maxSweeps=Sweeps)


# ******************************************************************************
class TestProblem:
    # **************************************************************************
    def test_NegativeData(self, grid):
        with pytest.raises(ValueError):
            Problem.constant(grid, -1.0, params(1.0, 1.0))

    # **************************************************************************
    def test_MaskShape(self, grid):
        with pytest.raises(GridMismatch):
            Problem.constant(grid, 1.0, params(1.0, 1.0), fixedMask=np.zeros((5, 5), dtype=np.bool_))

    # **************************************************************************
    def test_AllFixed(self, grid):
        with pytest.raises(InvalidParams):
            Problem.constant(grid, 1.0, params(1.0, 1.0), fixedMask=np.ones(grid.shape, dtype=np.bool_))

    # **************************************************************************
    def test_Ball(self):
        problem = ballProblem(1.0, 0.5, params(1.0, 1.0), 17)
        assert problem.grid.sameAs(ballGrid((0, 0), 1.0, 17))
        assert problem.dirichletMask[0, 0] and not problem.dirichletMask[8, 8]
        assert problem.freeMask.sum() == BallSpec(center=(0, 0), radius=1.0).mask(problem.grid).sum() - 4
        assert problem.dataSup() == 0.5

    # **************************************************************************
    def test_Expressions(self, grid):
        problem = Problem.fromFunction(grid, BoundaryExpressions['linear'], params(1.0, 1.0))
        assert problem.dataSup() == 2.0


# ******************************************************************************
class TestSolve:
    # **************************************************************************
    @pytest.fixture(scope='class')
    def deadCore(self, grid):
        problem = Problem.constant(grid, 1.0, params(1.0, 500.0))
        return problem, *solve(problem)

    # **************************************************************************
    def test_ZeroData(self, grid):
        field, report = solve(Problem.constant(grid, 0.0, params(1.0, 5.0)))
        assert field.supNorm() == 0.0
        assert report.converged
        assert report.plateauFraction == 1.0

    # **************************************************************************
    def test_LinearDataWithoutAbsorption(self, grid):
        problem = Problem.fromFunction(grid, lambda x, y: 0.5 + 0.3 * x - 0.2 * y, params(1.0, 0.0))
        field, report = solve(problem)
        X, Y = grid.meshgrid()
        assert report.converged
        assert np.abs(field.values - (0.5 + 0.3 * X - 0.2 * Y)).max() <= 1e-6

    # **************************************************************************
    def test_DeadCore(self, deadCore):
        problem, field, report = deadCore
        assert report.converged
        assert report.plateauFraction > 0.0
        assert report.bracketViolations == 0
        assert field.min() >= 0.0
        assert field.max() <= 1.0
        assert field[16, 16] <= 100 * Tol
        assert (field.values[problem.dirichletMask] == 1.0).all()

    # **************************************************************************
    def test_Symmetry(self, deadCore):
        _, field, _ = deadCore
        u = field.values
        assert np.abs(u - u.T).max() <= 1e-6
        assert np.abs(u - u[::-1, :]).max() <= 1e-6

    # **************************************************************************
    def test_MonotoneTowardsCenter(self, deadCore):
        _, field, _ = deadCore
        row = field.values[:17, 16]
        assert (np.diff(row) <= 1e-7).all()

    # **************************************************************************
    def test_Sandwich(self, deadCore):
        problem, field, _ = deadCore
        lower, upper = initialBounds(problem)
        free = problem.freeMask
        assert (field.values[free] >= lower.values[free] - 10 * Tol).all()
        assert (field.values[free] <= upper.values[free] + 10 * Tol).all()

    # **************************************************************************
    def test_FromBelow(self, deadCore):
        problem, field, _ = deadCore
        other, report = solve(problem, start=StartFrom.Lower)
        assert report.converged
        assert np.abs(other.values - field.values).max() <= 20 * Tol

    # **************************************************************************
    def test_NodeUpdateIsFixedPoint(self, deadCore):
        problem, field, _ = deadCore
        for node in [(3, 5), (8, 20), (12, 12)]:
            assert nodeUpdate(field, node, problem.params) == pytest.approx(field[node], abs=10 * Tol)
        with pytest.raises(BoundaryNode):
            nodeUpdate(field, (0, 3), problem.params)

    # **************************************************************************
    @pytest.mark.parametrize('gamma', [0.0, 1.0, 2.0])
    def test_ConvergesFromBothBounds(self, grid, gamma):
        problem = Problem.constant(grid, 1.0, params(gamma, 1.0))
        lower, upper = initialBounds(problem)
        above, report = solve(problem)
        below, reportBelow = solve(problem, start=StartFrom.Lower)
        assert report.converged and reportBelow.converged
        assert report.bracketViolations == 0 and reportBelow.bracketViolations == 0
        free = problem.freeMask
        assert (above.values[free] >= lower.values[free] - 10 * Tol).all()
        assert (below.values[free] <= upper.values[free] + 10 * Tol).all()
        assert np.abs(above.values - below.values).max() <= 20 * Tol

    # **************************************************************************
    def test_NodeUpdateRoot(self):
        grid = makeGrid((0, 0), (2, 2), (3, 3))
        values = np.zeros(grid.shape)
        values[2, 1] = 1.0
        field = ScalarField(grid, values)
        assert nodeUpdate(field, (1, 1), Params(gamma=1.0, lam=0.0)) == pytest.approx(0.5)
        t = nodeUpdate(field, (1, 1), Params(gamma=1.0, lam=1.0))
        assert 0.0 < t <= 0.5
        assert ((1 - t) ** 3 - t ** 3) / 3 == pytest.approx(t, abs=1e-9)

    # **************************************************************************
    def test_Comparison(self, grid):
        high, _ = solve(Problem.constant(grid, 1.0, params(2.0, 3.0)))
        low, _ = solve(Problem.constant(grid, 0.5, params(2.0, 3.0)))
        assert (low.values <= high.values + 10 * Tol).all()

    # **************************************************************************
    def test_MoreAbsorptionIsSmaller(self, grid):
        weak, _ = solve(Problem.constant(grid, 1.0, params(1.0, 10.0)))
        strong, _ = solve(Problem.constant(grid, 1.0, params(1.0, 100.0)))
        assert (strong.values <= weak.values + 10 * Tol).all()

    # **************************************************************************
    def test_VariableLambdaMatchesConstant(self):
        grid = makeGrid((0, 0), (1, 1), (17, 17))
        constant, _ = solve(Problem.constant(grid, 1.0, params(1.0, 50.0)))
        variable = params(1.0, 50.0).replaced(lam=ScalarField.constant(grid, 50.0))
        field, _ = solve(Problem.constant(grid, 1.0, variable))
        np.testing.assert_allclose(field.values, constant.values, atol=1e-12)

    # **************************************************************************
    def test_NotConverged(self, grid):
        problem = Problem.constant(grid, 1.0, Params(gamma=1.0, lam=1.0, tolUpdate=1e-12, maxSweeps=3))
        with pytest.raises(NotConverged) as e:
            solve(problem)
        assert e.value.report.sweeps == 3
        assert not e.value.report.converged
        assert e.value.field.grid.sameAs(grid)

        field, report = solve(problem, raiseOnFailure=False)
        assert not report.converged
        assert field.max() <= 1.0

    # **************************************************************************
    def test_CriticalNeedsFlag(self, grid):
        problem = Problem.constant(grid, 1.0, params(3.0, 1.0))
        with pytest.raises(CriticalGamma):
            solve(problem)

    # **************************************************************************
    def test_ReportSerialization(self, deadCore):
        _, _, report = deadCore
        data = report.model_dump(by_alias=True)
        assert {'sweeps', 'final_max_residual', 'final_max_update', 'plateau_fraction', 'converged',
                'bracket_violations'} <= data.keys()


# ******************************************************************************
class TestInfinityHarmonic:
    # **************************************************************************
    def test_SignChangingData(self):
        grid = makeGrid((-1, -1), (2, 2), (33, 33))
        data = ScalarField(grid, BoundaryExpressions['aronsson'](*grid.meshgrid()))
        field = solveInfinityHarmonic(grid, data, tolUpdate=Tol, maxSweeps=Sweeps)
        boundary = data.boundaryValues()
        assert field.max() <= boundary.max() + Tol
        assert field.min() >= boundary.min() - Tol
        np.testing.assert_array_equal(field.boundaryValues(), boundary)

    # **************************************************************************
    def test_GridMismatch(self, grid):
        data = ScalarField.constant(makeGrid((0, 0), (1, 1), (9, 9)), 0.0)
        with pytest.raises(GridMismatch):
            solveInfinityHarmonic(grid, data)

# ******************************************************************************
