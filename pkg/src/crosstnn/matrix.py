"""Dense exact matrices with the rotation operator and minor machinery.

Matrices are immutable square arrays of exact scalars (rationals,
polynomials, or rational functions; homogeneous per matrix), indexed
1-based to match the usual linear-algebra conventions for the
order-reversing map w0(i) = n + 1 - i.  Alongside the basic operators
this module carries the brute-force all-minors total-nonnegativity
oracle and the plain-text / JSON-compatible matrix formats.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction

from .exact import (
    Poly,
    RatFunc,
    SignUndecidedOnRay,
    as_ratfunc,
    format_scalar,
    parse_scalar,
    scalar_sign,
    split_scalar_tokens,
)
from .verdicts import (
    INAPPLICABLE_SYMBOLIC_INDEFINITE,
    REASON_NEGATIVE_MINOR,
    Inapplicable,
    NotTnn,
    TotallyNonnegative,
    Verdict,
    Witness,
)

__all__ = [
    "Matrix",
    "w0",
    "tau",
    "is_cross_symmetric",
    "exchange_matrix",
    "minor",
    "determinant",
    "zero_pattern_violation",
    "brute_force_tnn",
    "matrix_to_text",
    "matrix_from_text",
    "matrix_to_doc",
    "matrix_from_doc",
    "matrix_from_payload",
]


class Matrix:
    """Immutable dense square matrix over exact scalars.

    Entries are coerced to a homogeneous scalar kind at construction:
    plain integers become rationals, and the presence of any polynomial
    (or rational-function) entry lifts the whole matrix to that kind.
    """

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square with n >= 1")
        flat = [x for r in rows for x in r]
        if any(isinstance(x, RatFunc) for x in flat):
            rows = [[as_ratfunc(x) for x in r] for r in rows]
        elif any(isinstance(x, Poly) for x in flat):
            rows = [[x if isinstance(x, Poly) else Poly((x,)) for x in r] for r in rows]
        else:
            rows = [[x if isinstance(x, Fraction) else Fraction(x) for x in r] for r in rows]
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int):
        """1-based access."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i},{j}) outside 1..{self.n}")
        return self.rows[i - 1][j - 1]

    @property
    def is_symbolic(self) -> bool:
        return isinstance(self.rows[0][0], (Poly, RatFunc))

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return Matrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.rows)
        return f"Matrix({self.n}x{self.n}: {body})"


def w0(i: int, n: int) -> int:
    """The order-reversing index map i -> n + 1 - i."""
    if not 1 <= i <= n:
        raise IndexError(f"index {i} outside 1..{n}")
    return n + 1 - i


def exchange_matrix(n: int) -> Matrix:
    """Ones on the anti-diagonal, zeros elsewhere; an involution."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Matrix([[Fraction(int(i + j == n - 1)) for j in range(n)] for i in range(n)])


def tau(A: Matrix) -> Matrix:
    """Rotate the matrix half a turn: entry (i,j) becomes entry (w0(i), w0(j))."""
    n = A.n
    return Matrix([[A.rows[n - 1 - i][n - 1 - j] for j in range(n)] for i in range(n)])


def is_cross_symmetric(A: Matrix) -> bool:
    """True iff the matrix equals its half-turn rotation, exactly."""
    n = A.n
    return all(
        A.rows[i][j] == A.rows[n - 1 - i][n - 1 - j] for i in range(n) for j in range(n)
    )


def _det_2x2(m) -> object:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _det_3x3(m) -> object:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _det_bareiss(rows) -> Fraction:
    # Fraction-free elimination; divisions are exact, which keeps
    # integer matrices integral throughout.
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return m[-1][-1] if sign > 0 else -m[-1][-1]


def _det_gauss_symbolic(rows) -> RatFunc:
    # Field arithmetic over rational functions is exact anyway.
    m = [[as_ratfunc(x) for x in r] for r in rows]
    n = len(m)
    det = RatFunc(Poly((1,)))
    negate = False
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if not m[i][k].is_zero), None)
        if pivot_row is None:
            return RatFunc(Poly())
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            negate = not negate
        pivot = m[k][k]
        det = det * pivot
        for i in range(k + 1, n):
            if m[i][k].is_zero:
                continue
            factor = m[i][k] / pivot
            for j in range(k + 1, n):
                m[i][j] = m[i][j] - factor * m[k][j]
            m[i][k] = RatFunc(Poly())
    return -det if negate else det


def _det_rows(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return _det_2x2(rows)
    if n == 3:
        return _det_3x3(rows)
    if any(isinstance(x, (Poly, RatFunc)) for r in rows for x in r):
        return _det_gauss_symbolic(rows)
    return _det_bareiss(rows)


def determinant(A: Matrix):
    """Exact determinant; zero iff singular (identically zero for symbolic entries)."""
    return _det_rows(A.rows)


def _check_index_set(indices, n: int) -> tuple:
    idx = tuple(indices)
    if not idx:
        raise ValueError("index set must be nonempty")
    if any(not 1 <= i <= n for i in idx):
        raise ValueError(f"indices must lie in 1..{n}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError("indices must be strictly increasing")
    return idx


def minor(A: Matrix, row_indices, col_indices):
    """Exact determinant of the submatrix on the given 1-based index sets."""
    rows_idx = _check_index_set(row_indices, A.n)
    cols_idx = _check_index_set(col_indices, A.n)
    if len(rows_idx) != len(cols_idx):
        raise ValueError("index sets must have the same size")
    sub = [[A.rows[i - 1][j - 1] for j in cols_idx] for i in rows_idx]
    return _det_rows(sub)


def zero_pattern_violation(A: Matrix) -> tuple | None:
    """First pair (s, t) with row s zero through column t but a nonzero entry below.

    An invertible totally nonnegative matrix admits no such pair, so this
    is a cheap pre-filter before the full test.
    """
    n = A.n
    for s in range(1, n):
        for t in range(1, n + 1):
            if A.entry(s, t) != 0:
                break
            if A.entry(s + 1, t) != 0:
                return (s, t)
    return None


def brute_force_tnn(A: Matrix, ray: int | None = None) -> Verdict:
    """Enumerate every minor, smallest sizes first, then lexicographically.

    Returns the first negative minor as the refutation witness; a
    symbolic sign query that stays indefinite on the ray aborts with the
    offending minor attached.  Certified verdicts carry no factorization.
    """
    n = A.n
    indices = range(1, n + 1)
    for size in range(1, n + 1):
        for rows_idx in itertools.combinations(indices, size):
            for cols_idx in itertools.combinations(indices, size):
                value = minor(A, rows_idx, cols_idx)
                try:
                    sign = scalar_sign(value, ray)
                except SignUndecidedOnRay as exc:
                    return Inapplicable(
                        INAPPLICABLE_SYMBOLIC_INDEFINITE,
                        bound=exc.witness_bound,
                        rows=rows_idx,
                        cols=cols_idx,
                    )
                if sign < 0:
                    return NotTnn(
                        Witness(
                            REASON_NEGATIVE_MINOR,
                            rows=rows_idx,
                            cols=cols_idx,
                            value=value,
                        )
                    )
    return TotallyNonnegative()


# -- matrix formats ----------------------------------------------------


def matrix_to_text(A: Matrix) -> str:
    """Plain text: first line n, then n rows of whitespace-separated scalars."""
    lines = [str(A.n)]
    for r in A.rows:
        lines.append(" ".join(format_scalar(x) for x in r))
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> Matrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    n = int(lines[0].strip())
    if len(lines) < n + 1:
        raise ValueError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1 : n + 1]:
        tokens = split_scalar_tokens(ln)
        if len(tokens) != n:
            raise ValueError(f"expected {n} entries per row, found {len(tokens)}")
        rows.append([parse_scalar(tok) for tok in tokens])
    return Matrix(rows)


def matrix_to_doc(A: Matrix) -> dict:
    return {
        "n": A.n,
        "entries": [[format_scalar(x) for x in r] for r in A.rows],
    }


def matrix_from_doc(doc: dict) -> Matrix:
    n = int(doc["n"])
    entries = doc["entries"]
    if len(entries) != n or any(len(r) != n for r in entries):
        raise ValueError("entries do not form an n x n array")
    return Matrix(
        [[parse_scalar(str(x)) for x in row] for row in entries]
    )


def matrix_from_payload(text: str) -> Matrix:
    """Accept either the plain-text format or the JSON document form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return matrix_from_doc(json.loads(stripped))
    return matrix_from_text(text)
