"""Shared helpers for building random exact matrices in the test suites."""

from fractions import Fraction

from crosstnn import Matrix


def random_rational(rng, lo=-9, hi=9, max_den=4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_matrix(rng, n, lo=-9, hi=9, max_den=4) -> Matrix:
    return Matrix(
        [[random_rational(rng, lo, hi, max_den) for _ in range(n)] for _ in range(n)]
    )


def random_cross_symmetric(rng, n, lo=-9, hi=9, max_den=4) -> Matrix:
    """Random matrix invariant under the half-turn rotation."""
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if rows[i][j] is None:
                value = random_rational(rng, lo, hi, max_den)
                rows[i][j] = value
                rows[n - 1 - i][n - 1 - j] = value
    return Matrix(rows)
