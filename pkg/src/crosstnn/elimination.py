"""Symmetry-preserving elimination and atom factorization certificates.

Classical column-clearing tests for total nonnegativity destroy
cross-symmetry.  The elimination here clears below-diagonal entries
bottom-up, column by column, with *paired* adjacent-row operations
F = I - c E(s+1, s) - c E(w0(s+1), w0(s)) that keep every intermediate
matrix cross-symmetric.  On invertible cross-symmetric input it either
reaches a positive diagonal -- yielding a certificate that writes the
matrix as a product of totally nonnegative "atoms" and a positive
diagonal -- or fails at a concrete position that witnesses a negative
minor.

Two independent oracles accompany it: the classical Neville test
(:func:`neville_tnn_test`) and the all-minors brute force in
:mod:`crosstnn.matrix`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    Poly,
    RatFunc,
    SignUndecidedOnRay,
    format_scalar,
    parse_scalar,
    scalar_sign,
)
from .matrix import Matrix, determinant, is_cross_symmetric, w0
from .verdicts import (
    INAPPLICABLE_NOT_CROSS_SYMMETRIC,
    INAPPLICABLE_SINGULAR,
    INAPPLICABLE_SYMBOLIC_INDEFINITE,
    REASON_CENTER_NOT_LESS_THAN_ONE,
    REASON_NEGATIVE_MULTIPLIER,
    REASON_NONPOSITIVE_DIAGONAL,
    REASON_NONPOSITIVE_PIVOT,
    REASON_ZERO_PIVOT_NONZERO_BELOW,
    Inapplicable,
    NotTnn,
    TotallyNonnegative,
    Verdict,
    Witness,
)

__all__ = [
    "ElementaryStep",
    "Atom",
    "Factorization",
    "EliminationRun",
    "materialize_elementary",
    "materialize_atom",
    "cross_symmetric_eliminate",
    "eliminate_detailed",
    "neville_tnn_test",
    "factorization_product",
    "random_certified_tnn",
    "factorization_to_doc",
    "factorization_from_doc",
    "verdict_to_doc",
]


@dataclass(frozen=True)
class ElementaryStep:
    """One paired row operation: clear entry (s+1, t) against pivot (s, t).

    ``c`` is the shared multiplier a(s+1,t) / a(s,t); cross-symmetry makes
    the mirrored operation use the same value.  ``is_center`` marks the
    n = 2s case where the pair acts on the two middle rows at once.
    """

    s: int
    t: int
    c: object
    is_center: bool = False

    def __post_init__(self):
        if not 1 <= self.t <= self.s:
            raise ValueError(f"step needs 1 <= t <= s, got s={self.s}, t={self.t}")


@dataclass(frozen=True)
class Atom:
    """Inverse of an elementary step; the building block of certificates.

    A bridge atom (n != 2s) is I + c E(s+1, s) + c E(w0(s+1), w0(s)) with
    c > 0.  A center atom (n = 2s) is the identity except for the middle
    2x2 block [[1/(1-c^2), c/(1-c^2)], [c/(1-c^2), 1/(1-c^2)]] with
    0 < c < 1.  Both are cross-symmetric and totally nonnegative.
    Symbolic coefficients skip the numeric range checks here; their signs
    are certified on a ray by the elimination that produced them.
    """

    kind: str
    n: int
    s: int
    c: object

    def __post_init__(self):
        if self.kind not in ("bridge", "center"):
            raise ValueError(f"unknown atom kind {self.kind!r}")
        if not 1 <= self.s < self.n:
            raise ValueError(f"atom row {self.s} outside 1..{self.n - 1}")
        if self.kind == "bridge" and self.n == 2 * self.s:
            raise ValueError("bridge atom requires n != 2s")
        if self.kind == "center" and self.n != 2 * self.s:
            raise ValueError("center atom requires n = 2s")
        if isinstance(self.c, (int, Fraction)):
            c = Fraction(self.c)
            if c <= 0:
                raise ValueError("atom coefficient must be positive")
            if self.kind == "center" and c >= 1:
                raise ValueError("center atom coefficient must be < 1")


@dataclass(frozen=True)
class Factorization:
    """Certificate: the matrix equals atoms[0] * ... * atoms[-1] * diag(diagonal)."""

    n: int
    atoms: tuple
    diagonal: tuple

    def __post_init__(self):
        if len(self.diagonal) != self.n:
            raise ValueError("diagonal length must equal n")
        for atom in self.atoms:
            if atom.n != self.n:
                raise ValueError("atom dimension mismatch")
        for i, d in enumerate(self.diagonal):
            if isinstance(d, (int, Fraction)) and Fraction(d) <= 0:
                raise ValueError("diagonal entries must be positive")
            if d != self.diagonal[self.n - 1 - i]:
                raise ValueError("diagonal must be palindromic")


@dataclass(frozen=True)
class EliminationRun:
    """Full record of one elimination: verdict, steps taken, all intermediates."""

    verdict: Verdict
    steps: tuple
    intermediates: tuple


def materialize_elementary(step: ElementaryStep, n: int) -> Matrix:
    """The paired row-operation matrix F = I - c E(s+1,s) - c E(w0(s+1),w0(s)).

    For n = 2s the two subtracted cells are (s+1, s) and (s, s+1); for
    odd n with s+1 the middle row they land in the same row but distinct
    columns.  Allows c = 0 (the identity) for testing purposes.
    """
    s = step.s
    if not 1 <= s < n:
        raise ValueError(f"step row {s} outside 1..{n - 1}")
    if step.is_center != (n == 2 * s):
        raise ValueError("is_center flag inconsistent with n = 2s")
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows[s][s - 1] = rows[s][s - 1] - step.c
    r2, c2 = w0(s + 1, n), w0(s, n)
    rows[r2 - 1][c2 - 1] = rows[r2 - 1][c2 - 1] - step.c
    return Matrix(rows)


def materialize_atom(atom: Atom) -> Matrix:
    n = atom.n
    if atom.kind == "bridge":
        rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        s = atom.s
        rows[s][s - 1] = rows[s][s - 1] + atom.c
        r2, c2 = w0(s + 1, n), w0(s, n)
        rows[r2 - 1][c2 - 1] = rows[r2 - 1][c2 - 1] + atom.c
        return Matrix(rows)
    s = atom.s
    c = atom.c
    diag_value = 1 / (1 - c * c)
    off_value = c * diag_value
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows[s - 1][s - 1] = diag_value
    rows[s][s] = diag_value
    rows[s - 1][s] = off_value
    rows[s][s - 1] = off_value
    return Matrix(rows)


def _first_nonzero_below(M: Matrix) -> tuple | None:
    # Scan order: up the first column from the bottom, then up the
    # second column, and so on.  Zero tests are exact (identically zero
    # for symbolic entries).
    n = M.n
    for t in range(1, n):
        for i in range(n, t, -1):
            if M.entry(i, t) != 0:
                return (i, t)
    return None


def _apply_step(M: Matrix, s: int, c) -> Matrix:
    n = M.n
    old = M.rows
    rows = [list(r) for r in old]
    r1, src1 = s + 1, s
    r2, src2 = w0(s + 1, n), w0(s, n)
    if r1 == r2:
        # Odd n with s+1 the middle row: both operations hit that row.
        rows[r1 - 1] = [
            old[r1 - 1][j] - c * old[src1 - 1][j] - c * old[src2 - 1][j] for j in range(n)
        ]
    else:
        rows[r1 - 1] = [old[r1 - 1][j] - c * old[src1 - 1][j] for j in range(n)]
        rows[r2 - 1] = [old[r2 - 1][j] - c * old[src2 - 1][j] for j in range(n)]
    return Matrix(rows)


def eliminate_detailed(A: Matrix, ray: int | None = None) -> EliminationRun:
    """Run the symmetry-preserving elimination, keeping every intermediate.

    The scan restarts from the head of the position list after each step;
    the step just taken only rewrites its two paired rows, so the cleared
    prefix is re-verified cheaply.  Failure conditions, each of which
    certifies a negative minor in the original matrix:

    * the first nonzero below-diagonal entry is negative,
    * the pivot directly above it is zero (an invertible totally
      nonnegative matrix cannot have a zero row-prefix with a nonzero
      entry just below) or negative,
    * in the n = 2s case, a multiplier c >= 1 (the two middle rows of an
      invertible cross-symmetric totally nonnegative matrix satisfy
      a(s+1, t) < a(s, t) strictly),
    * a nonpositive entry on the final diagonal.

    For symbolic matrices, signs are decided on [ray, inf); an
    undecidable query yields an inapplicable verdict carrying the bound
    beyond which that query becomes definite.
    """
    n = A.n
    steps: list = []
    intermediates = [A]

    def finish(verdict: Verdict) -> EliminationRun:
        return EliminationRun(verdict, tuple(steps), tuple(intermediates))

    if not is_cross_symmetric(A):
        return finish(Inapplicable(INAPPLICABLE_NOT_CROSS_SYMMETRIC))
    if determinant(A) == 0:
        return finish(Inapplicable(INAPPLICABLE_SINGULAR))

    current = A
    try:
        while True:
            pos = _first_nonzero_below(current)
            if pos is None:
                break
            i, t = pos
            s = i - 1
            below = current.entry(i, t)
            if scalar_sign(below, ray) < 0:
                return finish(
                    NotTnn(
                        Witness(
                            REASON_NEGATIVE_MULTIPLIER,
                            s=s,
                            t=t,
                            value=below,
                            trace=tuple(steps),
                        )
                    )
                )
            pivot = current.entry(s, t)
            if pivot == 0:
                return finish(
                    NotTnn(
                        Witness(
                            REASON_ZERO_PIVOT_NONZERO_BELOW,
                            s=s,
                            t=t,
                            value=below,
                            trace=tuple(steps),
                        )
                    )
                )
            if scalar_sign(pivot, ray) < 0:
                return finish(
                    NotTnn(
                        Witness(
                            REASON_NONPOSITIVE_PIVOT,
                            s=s,
                            t=t,
                            value=pivot,
                            trace=tuple(steps),
                        )
                    )
                )
            c = below / pivot
            is_center = n == 2 * s
            if is_center and scalar_sign(pivot - below, ray) <= 0:
                return finish(
                    NotTnn(
                        Witness(
                            REASON_CENTER_NOT_LESS_THAN_ONE,
                            s=s,
                            t=t,
                            value=c,
                            trace=tuple(steps),
                        )
                    )
                )
            steps.append(ElementaryStep(s=s, t=t, c=c, is_center=is_center))
            current = _apply_step(current, s, c)
            intermediates.append(current)

        # Cross-symmetry of the final matrix forces the upper triangle to
        # be zero once the lower one is; assert rather than assume.
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j and current.entry(i, j) != 0:
                    raise AssertionError(
                        f"off-diagonal residue at ({i},{j}) after elimination"
                    )
        diag = tuple(current.entry(i, i) for i in range(1, n + 1))
        for index, d in enumerate(diag, start=1):
            if scalar_sign(d, ray) <= 0:
                return finish(
                    NotTnn(
                        Witness(
                            REASON_NONPOSITIVE_DIAGONAL,
                            index=index,
                            value=d,
                            trace=tuple(steps),
                        )
                    )
                )
    except SignUndecidedOnRay as exc:
        return finish(
            Inapplicable(INAPPLICABLE_SYMBOLIC_INDEFINITE, bound=exc.witness_bound)
        )

    atoms = tuple(
        Atom(
            kind="center" if step.is_center else "bridge",
            n=n,
            s=step.s,
            c=step.c,
        )
        for step in steps
    )
    fact = Factorization(n=n, atoms=atoms, diagonal=diag)
    return finish(TotallyNonnegative(factorization=fact))


def cross_symmetric_eliminate(A: Matrix, ray: int | None = None) -> Verdict:
    """Test an invertible cross-symmetric matrix for total nonnegativity.

    Certified verdicts carry a factorization whose product reproduces the
    input exactly.  Singular or non-cross-symmetric inputs are
    inapplicable (use :func:`crosstnn.matrix.brute_force_tnn` for those).
    """
    return eliminate_detailed(A, ray).verdict


def neville_tnn_test(A: Matrix, ray: int | None = None) -> Verdict:
    """Classical adjacent-row elimination test, as an independent oracle.

    Eliminates each column bottom-up using only the row immediately
    above, on the matrix and then on its transpose; every multiplier must
    be nonnegative, no zero pivot may sit above a nonzero entry, and the
    final diagonals must be positive.  Valid for invertible input, where
    it must agree with :func:`cross_symmetric_eliminate`; singular input
    is inapplicable.  No factorization is produced.  Witness positions
    for the second pass refer to the transposed matrix.
    """
    if determinant(A) == 0:
        return Inapplicable(INAPPLICABLE_SINGULAR)
    n = A.n
    try:
        for M in (A, A.transpose()):
            rows = [list(r) for r in M.rows]
            for t in range(n - 1):
                for i in range(n - 1, t, -1):
                    x = rows[i][t]
                    if x == 0:
                        continue
                    above = rows[i - 1][t]
                    if above == 0:
                        return NotTnn(
                            Witness(
                                REASON_ZERO_PIVOT_NONZERO_BELOW, s=i, t=t + 1, value=x
                            )
                        )
                    multiplier = x / above
                    if scalar_sign(multiplier, ray) < 0:
                        return NotTnn(
                            Witness(
                                REASON_NEGATIVE_MULTIPLIER,
                                s=i,
                                t=t + 1,
                                value=multiplier,
                            )
                        )
                    rows[i] = [a - multiplier * b for a, b in zip(rows[i], rows[i - 1])]
            for d in range(n):
                if scalar_sign(rows[d][d], ray) <= 0:
                    return NotTnn(
                        Witness(
                            REASON_NONPOSITIVE_DIAGONAL, index=d + 1, value=rows[d][d]
                        )
                    )
    except SignUndecidedOnRay as exc:
        return Inapplicable(INAPPLICABLE_SYMBOLIC_INDEFINITE, bound=exc.witness_bound)
    return TotallyNonnegative()


def factorization_product(f: Factorization) -> Matrix:
    """Multiply the certificate back out, exactly."""
    M = Matrix.identity(f.n)
    for atom in f.atoms:
        M = M * materialize_atom(atom)
    return M * Matrix.diagonal(f.diagonal)


def random_certified_tnn(n: int, seed, atom_count: int = 3):
    """Sample a certified-by-construction instance: (matrix, factorization).

    Atoms are drawn with positive rational coefficients (center atoms
    strictly inside (0, 1)) and the diagonal is palindromic positive, so
    the product is invertible, cross-symmetric and totally nonnegative.
    Deterministic per seed.  For n = 1 no atom exists and the diagonal is
    returned on its own.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    atoms = []
    if n >= 2:
        for _ in range(atom_count):
            s = rng.randint(1, n - 1)
            if n == 2 * s:
                den = rng.randint(2, 12)
                num = rng.randint(1, den - 1)
                atoms.append(Atom("center", n, s, Fraction(num, den)))
            else:
                atoms.append(
                    Atom("bridge", n, s, Fraction(rng.randint(1, 12), rng.randint(1, 12)))
                )
    half = [Fraction(rng.randint(1, 12), rng.randint(1, 4)) for _ in range((n + 1) // 2)]
    diagonal = tuple(half + list(reversed(half[: n // 2])))
    fact = Factorization(n=n, atoms=tuple(atoms), diagonal=diagonal)
    return factorization_product(fact), fact


# -- serialization -----------------------------------------------------


def factorization_to_doc(f: Factorization) -> dict:
    return {
        "n": f.n,
        "atoms": [
            {"kind": atom.kind, "s": atom.s, "c": format_scalar(atom.c)}
            for atom in f.atoms
        ],
        "diagonal": [format_scalar(d) for d in f.diagonal],
    }


def factorization_from_doc(doc: dict) -> Factorization:
    n = int(doc["n"])
    atoms = tuple(
        Atom(kind=a["kind"], n=n, s=int(a["s"]), c=parse_scalar(str(a["c"])))
        for a in doc["atoms"]
    )
    diagonal = tuple(parse_scalar(str(d)) for d in doc["diagonal"])
    return Factorization(n=n, atoms=atoms, diagonal=diagonal)


def _witness_to_doc(witness: Witness) -> dict:
    doc: dict = {"reason": witness.reason}
    if witness.s is not None:
        doc["s"] = witness.s
    if witness.t is not None:
        doc["t"] = witness.t
    if witness.index is not None:
        doc["index"] = witness.index
    if witness.rows is not None:
        doc["rows"] = list(witness.rows)
    if witness.cols is not None:
        doc["cols"] = list(witness.cols)
    if witness.value is not None:
        doc["value"] = format_scalar(witness.value)
    if witness.trace:
        doc["trace"] = [
            {
                "s": step.s,
                "t": step.t,
                "c": format_scalar(step.c),
                "center": step.is_center,
            }
            for step in witness.trace
        ]
    return doc


def verdict_to_doc(verdict: Verdict) -> dict:
    if isinstance(verdict, TotallyNonnegative):
        doc: dict = {"verdict": "totally-nonnegative"}
        if verdict.factorization is not None:
            doc["factorization"] = factorization_to_doc(verdict.factorization)
        return doc
    if isinstance(verdict, NotTnn):
        return {"verdict": "not-totally-nonnegative", "witness": _witness_to_doc(verdict.witness)}
    if isinstance(verdict, Inapplicable):
        doc = {"verdict": "inapplicable", "reason": verdict.reason}
        if verdict.bound is not None:
            doc["bound"] = verdict.bound
        if verdict.rows is not None:
            doc["rows"] = list(verdict.rows)
            doc["cols"] = list(verdict.cols)
        return doc
    raise TypeError(f"not a verdict: {verdict!r}")
