"""Weighted planar networks realizing atom factorizations.

A totally nonnegative matrix is exactly the weighted path matrix of a
planar network: n wires run left to right through a sequence of "chips",
each chip contributing one horizontal edge per wire plus slant edges
between adjacent wires, all weights positive.  Entry (i, j) of the path
matrix sums, over directed paths from source i to sink j, the product of
edge weights -- which is precisely the product of the chips' transfer
matrices.

:func:`network_from_factorization` turns each bridge atom into a single
chip (two slants of weight c, unit horizontals), expands each center atom
through the exact identity

    [[a, e], [e, a]] = (I + c E(s+1,s)) * diag(a, 1) * (I + c E(s,s+1)),
    a = 1/(1 - c^2),  e = c/(1 - c^2)

into three consecutive chips, and closes with one chip holding the
positive diagonal.  Wires are numbered top to bottom, 1 at the top; a
matrix entry (p, q) = c becomes a slant from wire p to wire q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elimination import Factorization
from .exact import format_scalar, parse_scalar
from .matrix import Matrix, w0

__all__ = [
    "Slant",
    "Chip",
    "PlanarNetwork",
    "network_from_factorization",
    "path_matrix",
    "reflect",
    "export_dot",
    "network_to_doc",
    "network_from_doc",
]


@dataclass(frozen=True)
class Slant:
    """Directed edge from wire ``src`` to adjacent wire ``dst``, positive weight."""

    src: int
    dst: int
    weight: object


@dataclass(frozen=True)
class Chip:
    """One column of the network: a horizontal edge per wire plus slants."""

    horizontals: tuple
    slants: tuple


@dataclass(frozen=True)
class PlanarNetwork:
    n: int
    chips: tuple

    def __post_init__(self):
        for chip in self.chips:
            if len(chip.horizontals) != self.n:
                raise ValueError("each chip needs exactly one horizontal per wire")
            for slant in chip.slants:
                if abs(slant.src - slant.dst) != 1:
                    raise ValueError("slants must join adjacent wires")
                if not (1 <= slant.src <= self.n and 1 <= slant.dst <= self.n):
                    raise ValueError("slant wire outside 1..n")
                if isinstance(slant.weight, (int, Fraction)) and Fraction(slant.weight) <= 0:
                    raise ValueError("slant weights must be positive")
            # Two slants cross iff their left and right endpoints are
            # oppositely ordered; sharing an endpoint is planar.
            for a in chip.slants:
                for b in chip.slants:
                    if (a.src - b.src) * (a.dst - b.dst) < 0:
                        raise ValueError(f"crossing slants {a} and {b} in one chip")


def _bridge_chip(n: int, s: int, c) -> Chip:
    ones = tuple(Fraction(1) for _ in range(n))
    slants = (Slant(s + 1, s, c), Slant(w0(s + 1, n), w0(s, n), c))
    return Chip(ones, tuple(sorted(slants, key=lambda e: (e.src, e.dst))))


def _center_chips(n: int, s: int, c) -> tuple:
    ones = tuple(Fraction(1) for _ in range(n))
    a = 1 / (1 - c * c)
    middle = tuple(a if wire == s else Fraction(1) for wire in range(1, n + 1))
    return (
        Chip(ones, (Slant(s + 1, s, c),)),
        Chip(middle, ()),
        Chip(ones, (Slant(s, s + 1, c),)),
    )


def network_from_factorization(f: Factorization) -> PlanarNetwork:
    """One chip per bridge atom, three per center atom, one for the diagonal."""
    chips = []
    for atom in f.atoms:
        if atom.kind == "bridge":
            chips.append(_bridge_chip(f.n, atom.s, atom.c))
        else:
            chips.extend(_center_chips(f.n, atom.s, atom.c))
    chips.append(Chip(tuple(f.diagonal), ()))
    return PlanarNetwork(n=f.n, chips=tuple(chips))


def _transfer_matrix(n: int, chip: Chip) -> Matrix:
    rows = [[chip.horizontals[i] if i == j else 0 for j in range(n)] for i in range(n)]
    for slant in chip.slants:
        rows[slant.src - 1][slant.dst - 1] = slant.weight
    return Matrix(rows)


def path_matrix(net: PlanarNetwork) -> Matrix:
    """Exact path-weight sums source-to-sink, by chip-wise transfer products."""
    M = Matrix.identity(net.n)
    for chip in net.chips:
        M = M * _transfer_matrix(net.n, chip)
    return M


def reflect(net: PlanarNetwork) -> PlanarNetwork:
    """Mirror the network in the horizontal centre line (wire w -> n + 1 - w).

    The path matrix of the reflection is the half-turn rotation of the
    original path matrix.
    """
    n = net.n
    chips = []
    for chip in net.chips:
        horizontals = tuple(reversed(chip.horizontals))
        slants = tuple(
            sorted(
                (Slant(w0(s.src, n), w0(s.dst, n), s.weight) for s in chip.slants),
                key=lambda e: (e.src, e.dst),
            )
        )
        chips.append(Chip(horizontals, slants))
    return PlanarNetwork(n=n, chips=tuple(chips))


def export_dot(net: PlanarNetwork) -> str:
    """Deterministic DOT digraph: one rank-aligned node column per chip boundary.

    Edge labels carry the exact weights; weight-1 edges stay unlabeled,
    matching the usual drawing convention.
    """
    n = net.n
    columns = len(net.chips) + 1
    lines = [
        "digraph planar_network {",
        "  rankdir=LR;",
        '  node [shape=point, width=0.08];',
    ]
    for col in range(columns):
        lines.append("  { rank=same;")
        for wire in range(1, n + 1):
            name = f"c{col}w{wire}"
            if col == 0:
                lines.append(f'    {name} [shape=plaintext, label="S{wire}"];')
            elif col == columns - 1:
                lines.append(f'    {name} [shape=plaintext, label="T{wire}"];')
            else:
                lines.append(f"    {name};")
        lines.append("  }")
    for col, chip in enumerate(net.chips):
        for wire in range(1, n + 1):
            weight = chip.horizontals[wire - 1]
            label = "" if weight == 1 else f' [label="{format_scalar(weight)}"]'
            lines.append(f"  c{col}w{wire} -> c{col + 1}w{wire}{label};")
        for slant in chip.slants:
            label = "" if slant.weight == 1 else f' [label="{format_scalar(slant.weight)}"]'
            lines.append(f"  c{col}w{slant.src} -> c{col + 1}w{slant.dst}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def network_to_doc(net: PlanarNetwork) -> dict:
    return {
        "n": net.n,
        "chips": [
            {
                "horizontals": [format_scalar(h) for h in chip.horizontals],
                "slants": [
                    {"from": s.src, "to": s.dst, "weight": format_scalar(s.weight)}
                    for s in chip.slants
                ],
            }
            for chip in net.chips
        ],
    }


def network_from_doc(doc: dict) -> PlanarNetwork:
    n = int(doc["n"])
    chips = tuple(
        Chip(
            tuple(parse_scalar(str(h)) for h in chip["horizontals"]),
            tuple(
                Slant(int(s["from"]), int(s["to"]), parse_scalar(str(s["weight"])))
                for s in chip["slants"]
            ),
        )
        for chip in doc["chips"]
    )
    return PlanarNetwork(n=n, chips=chips)
