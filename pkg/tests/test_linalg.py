"""Exact linear algebra: ranks, echelon forms, solvers, subspaces."""

import random
from fractions import Fraction

from dialab.linalg import (
    FactoredSolver,
    SubspaceBuilder,
    in_row_space,
    nullspace,
    rank_of_columns,
    rank_of_rows,
    rref,
    same_row_space,
    solve_affine,
)


def random_matrix(rng, rows, cols, density=0.6):
    return [
        [Fraction(rng.randrange(-4, 5)) if rng.random() < density
         else Fraction(0) for _ in range(cols)]
        for _ in range(rows)
    ]


def rank_oracle(mat):
    reduced, pivots = rref(mat)
    return len(pivots)


def test_rank_matches_dense_oracle():
    rng = random.Random(6)
    for _ in range(40):
        rows = rng.randrange(1, 7)
        cols = rng.randrange(1, 7)
        mat = random_matrix(rng, rows, cols)
        sparse_rows = [
            {j: v for j, v in enumerate(r) if v} for r in mat]
        sparse_cols = [
            {i: mat[i][j] for i in range(rows) if mat[i][j]}
            for j in range(cols)
        ]
        expect = rank_oracle(mat)
        assert rank_of_rows(sparse_rows) == expect
        assert rank_of_columns(sparse_cols, nrows=rows) == expect


def test_rank_with_fractions():
    independent = [{0: Fraction(1, 2), 1: Fraction(1, 3)},
                   {0: Fraction(3, 2), 1: Fraction(2)}]
    assert rank_of_rows(independent) == 2
    first = {0: Fraction(1, 2), 1: Fraction(1, 3)}
    scaled = {k: 3 * v for k, v in first.items()}
    assert rank_of_rows([first, scaled]) == 1


def test_nullspace_and_row_space():
    mat = [[Fraction(1), Fraction(2), Fraction(3)],
           [Fraction(2), Fraction(4), Fraction(6)]]
    null = nullspace(mat, 3)
    assert len(null) == 2
    for vec in null:
        assert sum(a * b for a, b in zip(mat[0], vec)) == 0
    assert same_row_space(mat, [mat[0]])
    assert in_row_space(mat, [Fraction(3), Fraction(6), Fraction(9)])
    assert not in_row_space(mat, [Fraction(1), Fraction(0), Fraction(0)])


def test_solve_affine_consistent_and_inconsistent():
    mat = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
    point, hom = solve_affine(mat, [Fraction(3), Fraction(1)])
    assert point == (Fraction(2), Fraction(1)) and hom == []
    singular = [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]]
    assert solve_affine(singular, [Fraction(1), Fraction(3)]) is None
    point, hom = solve_affine(singular, [Fraction(1), Fraction(2)])
    assert len(hom) == 1


def test_factored_solver_agrees_with_direct_solve():
    rng = random.Random(13)
    for _ in range(30):
        rows = rng.randrange(1, 7)
        cols = rng.randrange(1, 7)
        mat = random_matrix(rng, rows, cols)
        solver = FactoredSolver(mat)
        for _ in range(4):
            rhs = [Fraction(rng.randrange(-3, 4)) for _ in range(rows)]
            direct = solve_affine(mat, rhs)
            fast = solver.solve(rhs)
            if direct is None:
                assert fast is None
            else:
                assert fast is not None
                for i in range(rows):
                    assert sum(mat[i][j] * fast[j]
                               for j in range(cols)) == rhs[i]


def test_subspace_builder():
    sb = SubspaceBuilder(3)
    assert sb.add([1, 0, 1])
    assert sb.add([0, 1, 0])
    assert not sb.add([1, 1, 1])
    assert sb.rank == 2
    assert sb.contains([2, -3, 2])
    assert not sb.contains([0, 0, 1])
