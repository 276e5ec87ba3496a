"""Matrix core: rotation calculus, minors, determinants, brute-force oracle."""

import random
from fractions import Fraction

import pytest

from crosstnn import (
    Inapplicable,
    Matrix,
    NotTnn,
    Poly,
    TotallyNonnegative,
    amazing_matrix,
    brute_force_tnn,
    determinant,
    exchange_matrix,
    is_cross_symmetric,
    matrix_from_doc,
    matrix_from_payload,
    matrix_from_text,
    matrix_to_doc,
    matrix_to_text,
    minor,
    tau,
    w0,
    zero_pattern_violation,
)
from conftest import random_matrix

B = Poly.variable()


def _cofactor_det(rows):
    # Independent determinant oracle: first-row Laplace expansion.
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        sub = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * _cofactor_det(sub)
        total = total + (term if j % 2 == 0 else -term)
    return total


class TestIndexReversal:
    def test_w0_values(self):
        assert w0(1, 5) == 5
        assert w0(3, 5) == 3
        assert w0(2, 4) == 3

    def test_w0_rejects_out_of_range(self):
        with pytest.raises(IndexError):
            w0(0, 5)
        with pytest.raises(IndexError):
            w0(6, 5)


class TestTau:
    def test_small_example(self):
        assert tau(Matrix([[1, 2], [3, 4]])) == Matrix([[4, 3], [2, 1]])

    def test_fixes_cross_symmetric_matrix(self):
        m = Matrix([[6, 3], [3, 6]])
        assert tau(m) == m

    def test_involution(self):
        rng = random.Random("tau-involution")
        for _ in range(20):
            A = random_matrix(rng, 5)
            assert tau(tau(A)) == A

    def test_equals_conjugation_by_exchange(self):
        rng = random.Random("tau-exchange")
        for n in range(1, 6):
            A = random_matrix(rng, n)
            J = exchange_matrix(n)
            assert J * A * J == tau(A)

    def test_multiplicative(self):
        rng = random.Random("tau-product")
        for _ in range(20):
            n = rng.randint(1, 5)
            A, C = random_matrix(rng, n), random_matrix(rng, n)
            assert tau(A * C) == tau(A) * tau(C)


class TestCrossSymmetry:
    def test_known_cross_symmetric(self):
        assert is_cross_symmetric(Matrix([[10, 16, 1], [4, 19, 4], [1, 16, 10]]))

    def test_known_asymmetric(self):
        assert not is_cross_symmetric(Matrix([[1, 2], [3, 4]]))

    def test_identity(self):
        for n in (1, 2, 5):
            assert is_cross_symmetric(Matrix.identity(n))


class TestExchangeMatrix:
    def test_small(self):
        assert exchange_matrix(2) == Matrix([[0, 1], [1, 0]])
        assert exchange_matrix(1) == Matrix([[1]])

    def test_involution(self):
        for n in range(1, 6):
            J = exchange_matrix(n)
            assert J * J == Matrix.identity(n)


class TestMinor:
    def test_two_by_two(self):
        assert minor(Matrix([[6, 3], [3, 6]]), (1, 2), (1, 2)) == 27

    def test_singletons_are_entries(self):
        A = Matrix([[5, 7], [11, 13]])
        for i in (1, 2):
            for j in (1, 2):
                assert minor(A, (i,), (j,)) == A.entry(i, j)

    def test_rotation_minor_identity(self):
        rng = random.Random("minor-identity")
        for _ in range(30):
            n = rng.randint(1, 5)
            A = random_matrix(rng, n)
            rotated = tau(A)
            for size in range(1, n + 1):
                rows = sorted(rng.sample(range(1, n + 1), size))
                cols = sorted(rng.sample(range(1, n + 1), size))
                mirrored_rows = sorted(w0(i, n) for i in rows)
                mirrored_cols = sorted(w0(j, n) for j in cols)
                assert minor(rotated, rows, cols) == minor(A, mirrored_rows, mirrored_cols)

    def test_validation(self):
        A = Matrix.identity(3)
        with pytest.raises(ValueError):
            minor(A, (1, 2), (1,))
        with pytest.raises(ValueError):
            minor(A, (2, 1), (1, 2))
        with pytest.raises(ValueError):
            minor(A, (), ())
        with pytest.raises(ValueError):
            minor(A, (1, 4), (1, 2))


class TestDeterminant:
    def test_identity(self):
        assert determinant(Matrix.identity(4)) == 1

    def test_repeated_rows(self):
        assert determinant(Matrix([[1, 1], [1, 1]])) == 0

    def test_scaled_carries_matrix(self):
        A = amazing_matrix(3, 3, scaled=True)
        expected = _cofactor_det([list(r) for r in A.rows])
        assert expected == 729
        assert determinant(A) == expected

    def test_matches_cofactor_oracle(self):
        rng = random.Random("det-oracle")
        for _ in range(25):
            n = rng.randint(1, 5)
            A = random_matrix(rng, n)
            assert determinant(A) == _cofactor_det([list(r) for r in A.rows])

    def test_symbolic(self):
        A = Matrix([[B + 1, 1], [1, B + 1]])
        assert determinant(A) == B * B + 2 * B
        assert determinant(Matrix([[B, B], [B, B]])) == 0


class TestBruteForce:
    def test_antidiagonal_permutation_refuted(self):
        verdict = brute_force_tnn(Matrix([[0, 1], [1, 0]]))
        assert isinstance(verdict, NotTnn)
        assert verdict.witness.rows == (1, 2)
        assert verdict.witness.cols == (1, 2)
        assert verdict.witness.value == -1

    def test_all_ones(self):
        assert isinstance(brute_force_tnn(Matrix([[1, 1], [1, 1]])), TotallyNonnegative)

    def test_scaled_carries_matrix(self):
        verdict = brute_force_tnn(amazing_matrix(4, 3, scaled=True))
        assert isinstance(verdict, TotallyNonnegative)
        assert verdict.factorization is None

    def test_witness_is_first_in_order(self):
        # entry (1,2) is negative, so the first offending minor is the 1x1 there
        verdict = brute_force_tnn(Matrix([[1, -1], [-1, 1]]))
        assert verdict.witness.rows == (1,)
        assert verdict.witness.cols == (2,)

    def test_symbolic_with_ray(self):
        A = Matrix([[B, Poly((0,))], [Poly((0,)), B]])
        assert isinstance(brute_force_tnn(A, ray=2), TotallyNonnegative)

    def test_symbolic_indefinite_carries_minor(self):
        A = Matrix([[B - 3, Poly((0,))], [Poly((0,)), B - 3]])
        verdict = brute_force_tnn(A, ray=2)
        assert isinstance(verdict, Inapplicable)
        assert verdict.reason == "symbolic-indefinite"
        assert verdict.bound == 3
        assert verdict.rows == (1,) and verdict.cols == (1,)

    def test_verdict_invariant_under_rotation(self):
        rng = random.Random("brute-rotation")
        for _ in range(40):
            n = rng.randint(1, 4)
            A = random_matrix(rng, n)
            assert type(brute_force_tnn(A)) is type(brute_force_tnn(tau(A)))

    def test_certified_invertible_matrices_have_positive_diagonals(self):
        from crosstnn import random_certified_tnn

        rng = random.Random("positive-diagonal")
        for trial in range(40):
            n = rng.randint(1, 5)
            A, _ = random_certified_tnn(n, f"diag-{trial}", atom_count=rng.randint(0, 3))
            assert determinant(A) != 0
            assert isinstance(brute_force_tnn(A), TotallyNonnegative)
            assert all(A.entry(i, i) > 0 for i in range(1, n + 1))


class TestZeroPattern:
    def test_detects_violation(self):
        assert zero_pattern_violation(Matrix([[0, 1], [1, 0]])) == (1, 1)

    def test_identity_clean(self):
        assert zero_pattern_violation(Matrix.identity(3)) is None

    def test_scaled_carries_matrix_clean(self):
        assert zero_pattern_violation(amazing_matrix(4, 3, scaled=True)) is None


class TestFormats:
    def test_text_round_trip(self):
        A = Matrix([[Fraction(1, 2), 3], [4, Fraction(-5, 7)]])
        text = matrix_to_text(A)
        assert text == "2\n1/2 3\n4 -5/7\n"
        assert matrix_from_text(text) == A

    def test_text_write_is_deterministic(self):
        A = amazing_matrix(3, 3, scaled=True)
        assert matrix_to_text(A) == matrix_to_text(A)

    def test_doc_round_trip(self):
        A = amazing_matrix(3, 3, scaled=True)
        assert matrix_from_doc(matrix_to_doc(A)) == A

    def test_symbolic_round_trip(self):
        A = Matrix([[B + 1, 1], [1, B + 1]])
        assert matrix_from_text(matrix_to_text(A)) == A
        assert matrix_from_doc(matrix_to_doc(A)) == A

    def test_payload_sniffing(self):
        A = amazing_matrix(2, 3, scaled=True)
        import json

        assert matrix_from_payload(matrix_to_text(A)) == A
        assert matrix_from_payload(json.dumps(matrix_to_doc(A))) == A

    def test_malformed_text(self):
        with pytest.raises(ValueError):
            matrix_from_text("2\n1 2\n")
        with pytest.raises(ValueError):
            matrix_from_text("2\n1 2 3\n4 5 6\n")


class TestMatrixClass:
    def test_must_be_square(self):
        with pytest.raises(ValueError):
            Matrix([[1, 2], [3]])
        with pytest.raises(ValueError):
            Matrix([])

    def test_entry_access_is_one_based(self):
        A = Matrix([[1, 2], [3, 4]])
        assert A.entry(1, 2) == 2
        assert A.entry(2, 1) == 3
        with pytest.raises(IndexError):
            A.entry(0, 1)
        with pytest.raises(IndexError):
            A.entry(1, 3)

    def test_entries_homogenized(self):
        A = Matrix([[B, 1], [2, B]])
        assert all(isinstance(x, Poly) for r in A.rows for x in r)
        assert A.is_symbolic
        assert not Matrix([[1, 2], [3, 4]]).is_symbolic

    def test_product_and_transpose(self):
        A = Matrix([[1, 2], [3, 4]])
        C = Matrix([[0, 1], [1, 0]])
        assert A * C == Matrix([[2, 1], [4, 3]])
        assert A.transpose() == Matrix([[1, 3], [2, 4]])

    def test_diagonal_constructor(self):
        assert Matrix.diagonal([2, 3]) == Matrix([[2, 0], [0, 3]])
