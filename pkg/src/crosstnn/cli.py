"""Command-line front end with deterministic file I/O.

Commands::

    crosstnn gen --amazing N B [--scaled] [-o PATH]
    crosstnn gen --random SEED N ATOMS -o PATH
    crosstnn check PATH [--method cross|neville|minors] [--trace] [--ray B]
    crosstnn factor PATH [--out CERT] [--verify] [--ray B]
    crosstnn network INPUT [--format dot|doc] [-o OUT] [--ray B]
    crosstnn verify-amazing --n N [--escalation-cap K] [-o REPORT]

Exit codes: 0 certified/success, 1 refuted, 2 inapplicable or partial,
64 usage error, 65 malformed content, 66 unreadable input.  Output bytes
are a function of flags and input files only; all randomness is seeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .amazing import amazing_matrix, report_to_doc, verify_amazing
from .elimination import (
    eliminate_detailed,
    factorization_from_doc,
    factorization_to_doc,
    factorization_product,
    neville_tnn_test,
    random_certified_tnn,
    verdict_to_doc,
)
from .exact import format_scalar
from .matrix import brute_force_tnn, matrix_from_payload, matrix_to_text
from .network import export_dot, network_from_factorization, network_to_doc
from .verdicts import Inapplicable, NotTnn, TotallyNonnegative, verdict_label

EXIT_CERTIFIED = 0
EXIT_REFUTED = 1
EXIT_INAPPLICABLE = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NOINPUT = 66


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags, which would collide with
    # the "inapplicable" verdict; route usage problems to 64 instead.
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="crosstnn", description="Exact total-nonnegativity toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a matrix file")
    gen.add_argument("--amazing", nargs=2, type=int, metavar=("N", "B"))
    gen.add_argument("--random", nargs=3, metavar=("SEED", "N", "ATOMS"))
    gen.add_argument("--scaled", action="store_true", help="multiply entries by b^n")
    gen.add_argument("-o", "--output", metavar="PATH")

    check = sub.add_parser("check", help="test a matrix file for total nonnegativity")
    check.add_argument("path")
    check.add_argument(
        "--method", choices=("cross", "neville", "minors"), default="cross"
    )
    check.add_argument("--trace", action="store_true", help="print elimination steps")
    check.add_argument("--ray", type=int, help="ray start for symbolic matrices")

    factor = sub.add_parser("factor", help="emit the atom factorization certificate")
    factor.add_argument("path")
    factor.add_argument("--out", metavar="CERT")
    factor.add_argument(
        "--verify", action="store_true", help="re-multiply the certificate and compare"
    )
    factor.add_argument("--ray", type=int)

    network = sub.add_parser("network", help="render a matrix or certificate as a planar network")
    network.add_argument("input", help="matrix file or factorization certificate")
    network.add_argument("--format", choices=("dot", "doc"), default="dot")
    network.add_argument("-o", "--output", metavar="OUT")
    network.add_argument("--ray", type=int)

    verify = sub.add_parser("verify-amazing", help="certify the carries matrix for all bases")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--escalation-cap", type=int, default=3)
    verify.add_argument("-o", "--output", metavar="REPORT")

    return parser


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _json_text(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _verdict_exit(verdict) -> int:
    if isinstance(verdict, TotallyNonnegative):
        return EXIT_CERTIFIED
    if isinstance(verdict, NotTnn):
        return EXIT_REFUTED
    return EXIT_INAPPLICABLE


def _print_witness(witness) -> None:
    print(f"reason: {witness.reason}")
    if witness.s is not None:
        print(f"position: s={witness.s} t={witness.t}")
    if witness.index is not None:
        print(f"diagonal index: {witness.index}")
    if witness.rows is not None:
        print(f"rows: {','.join(map(str, witness.rows))}")
        print(f"cols: {','.join(map(str, witness.cols))}")
    if witness.value is not None:
        print(f"value: {format_scalar(witness.value)}")


def _print_steps(steps) -> None:
    for k, step in enumerate(steps, start=1):
        kind = "center" if step.is_center else "bridge"
        print(f"step {k}: s={step.s} t={step.t} c={format_scalar(step.c)} ({kind})")


def _cmd_gen(args) -> int:
    if (args.amazing is None) == (args.random is None):
        raise _UsageError("gen needs exactly one of --amazing or --random")
    if args.amazing is not None:
        n, b = args.amazing
        matrix = amazing_matrix(n, b, scaled=args.scaled)
        _emit(matrix_to_text(matrix), args.output)
        return EXIT_CERTIFIED
    seed, n_text, atoms_text = args.random
    n, atom_count = int(n_text), int(atoms_text)
    if args.output is None:
        raise _UsageError("gen --random needs -o (certificate is written alongside)")
    matrix, fact = random_certified_tnn(n, seed, atom_count)
    _emit(matrix_to_text(matrix), args.output)
    cert_path = os.path.splitext(args.output)[0] + ".cert.json"
    _emit(_json_text(factorization_to_doc(fact)), cert_path)
    return EXIT_CERTIFIED


def _cmd_check(args) -> int:
    matrix = matrix_from_payload(_read(args.path))
    if matrix.is_symbolic and args.ray is None:
        raise _UsageError("symbolic matrix: pass --ray to fix the sign ray")
    print(f"method: {args.method}")
    if args.method == "minors":
        verdict = brute_force_tnn(matrix, ray=args.ray)
        print(f"verdict: {verdict_label(verdict)}")
        if isinstance(verdict, NotTnn):
            _print_witness(verdict.witness)
        elif isinstance(verdict, Inapplicable):
            print(f"reason: {verdict.reason}")
        return _verdict_exit(verdict)
    if args.method == "neville":
        verdict = neville_tnn_test(matrix, ray=args.ray)
        print(f"verdict: {verdict_label(verdict)}")
        if isinstance(verdict, NotTnn):
            _print_witness(verdict.witness)
        elif isinstance(verdict, Inapplicable):
            print(f"reason: {verdict.reason}")
        return _verdict_exit(verdict)
    run = eliminate_detailed(matrix, ray=args.ray)
    verdict = run.verdict
    print(f"verdict: {verdict_label(verdict)}")
    if isinstance(verdict, TotallyNonnegative):
        fact = verdict.factorization
        print(f"atoms: {len(fact.atoms)}")
        print(f"diagonal: {' '.join(format_scalar(d) for d in fact.diagonal)}")
        if args.trace:
            _print_steps(run.steps)
    elif isinstance(verdict, NotTnn):
        _print_witness(verdict.witness)
        if args.trace:
            _print_steps(verdict.witness.trace)
    else:
        print(f"reason: {verdict.reason}")
        if verdict.bound is not None:
            print(f"bound: {verdict.bound}")
    return _verdict_exit(verdict)


def _cmd_factor(args) -> int:
    matrix = matrix_from_payload(_read(args.path))
    if matrix.is_symbolic and args.ray is None:
        raise _UsageError("symbolic matrix: pass --ray to fix the sign ray")
    verdict = eliminate_detailed(matrix, ray=args.ray).verdict
    if isinstance(verdict, NotTnn):
        print(f"not totally nonnegative: {verdict.witness.reason}", file=sys.stderr)
        return EXIT_REFUTED
    if isinstance(verdict, Inapplicable):
        print(f"inapplicable: {verdict.reason}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    fact = verdict.factorization
    if args.verify and factorization_product(fact) != matrix:
        raise AssertionError("certificate does not re-multiply to the input")
    _emit(_json_text(factorization_to_doc(fact)), args.out)
    return EXIT_CERTIFIED


def _load_network_input(args):
    text = _read(args.input)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(stripped)
        if "atoms" in doc:
            return factorization_from_doc(doc), EXIT_CERTIFIED
        matrix = matrix_from_payload(text)
    else:
        matrix = matrix_from_payload(text)
    if matrix.is_symbolic and args.ray is None:
        raise _UsageError("symbolic matrix: pass --ray to fix the sign ray")
    verdict = eliminate_detailed(matrix, ray=args.ray).verdict
    if isinstance(verdict, NotTnn):
        print(f"not totally nonnegative: {verdict.witness.reason}", file=sys.stderr)
        return None, EXIT_REFUTED
    if isinstance(verdict, Inapplicable):
        print(f"inapplicable: {verdict.reason}", file=sys.stderr)
        return None, EXIT_INAPPLICABLE
    return verdict.factorization, EXIT_CERTIFIED


def _cmd_network(args) -> int:
    fact, code = _load_network_input(args)
    if fact is None:
        return code
    net = network_from_factorization(fact)
    if args.format == "dot":
        _emit(export_dot(net), args.output)
    else:
        _emit(_json_text(network_to_doc(net)), args.output)
    return EXIT_CERTIFIED


def _cmd_verify_amazing(args) -> int:
    report = verify_amazing(args.n, escalation_cap=args.escalation_cap)
    _emit(_json_text(report_to_doc(report)), args.output)
    if report.overall == "certified":
        return EXIT_CERTIFIED
    if report.overall == "refuted":
        return EXIT_REFUTED
    return EXIT_INAPPLICABLE


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "factor":
            return _cmd_factor(args)
        if args.command == "network":
            return _cmd_network(args)
        return _cmd_verify_amazing(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except (ValueError, json.JSONDecodeError, KeyError) as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
