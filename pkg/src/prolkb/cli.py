"""
Command-line front end.

    prolkb gen --n 4 --i 2 [--ring theta|layer:R] [--format json|latex]
    prolkb word --n 4 "1 -2 3" [--ring theta|layer:R] [--format json|latex]
    prolkb verify --n 5 [--ring theta|layer:R]
    prolkb eq --n 3 "1 2 1" "2 1 2"
    prolkb rank --n 5 --k 3
    prolkb tower-check --n 4 --rmax 6
    prolkb lcs --preset zxz|theta|layer:R --depth D
    prolkb counterexample --rmax 16

Exit status: 0 on success, 1 when a verification fails (or `eq` finds the
braids different), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import groups
from .counterexample import cx_certificate
from .lkb import (
    braid_equal,
    check_word,
    enumerate_basis,
    parse_word,
    verify_braid_relations,
    word_matrix,
)
from .matrix import matrix_to_json, matrix_to_latex
from .ring import RingMorphism
from .tower import check_tower, make_layer


def _ring(text: str) -> RingMorphism | None:
    """'theta' -> None (no reduction); 'layer:R' -> Theta -> Z[Q_R]."""
    if text == "theta":
        return None
    kind, _, value = text.partition(":")
    if kind == "layer" and value.isdigit() and int(value) >= 2:
        return make_layer(int(value)).theta_map
    raise argparse.ArgumentTypeError(f"unknown ring {text!r}; expected theta or layer:R with R >= 2")


def _preset(text: str) -> groups.GroupDescriptor:
    if text == "zxz":
        return groups.zxz_group()
    if text == "theta":
        return groups.theta_group()
    kind, _, value = text.partition(":")
    if kind == "layer" and value.isdigit() and int(value) >= 2:
        return make_layer(int(value)).group
    raise argparse.ArgumentTypeError(f"unknown preset {text!r}; expected zxz, theta or layer:R")


def _word(text: str):
    try:
        return parse_word(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad braid word {text!r}; use signed integers like '1 -2 3'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prolkb", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="matrix of one generator sigma_i")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--ring", type=_ring, default=None)
    p.add_argument("--format", choices=("json", "latex"), default="json")

    p = sub.add_parser("word", help="matrix of a braid word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("letters", type=_word)
    p.add_argument("--ring", type=_ring, default=None)
    p.add_argument("--format", choices=("json", "latex"), default="json")

    p = sub.add_parser("verify", help="check the braid relations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ring", type=_ring, default=None)

    p = sub.add_parser("eq", help="decide equality of two braid words")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("w1", type=_word)
    p.add_argument("w2", type=_word)

    p = sub.add_parser("rank", help="basis of the rank C(n+k-2, k) module")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("tower-check", help="verify the tower of layer representations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)

    p = sub.add_parser("lcs", help="lower central series of a preset group")
    p.add_argument("--preset", type=_preset, required=True)
    p.add_argument("--depth", type=int, required=True)

    p = sub.add_parser("counterexample", help="non-liftable compatible sequence")
    p.add_argument("--rmax", type=int, required=True)
    return parser


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _matrix_out(matrix, n, fmt):
    if fmt == "latex":
        sys.stdout.write(matrix_to_latex(matrix))
    else:
        _emit(matrix_to_json(matrix, n))


def _validate(args) -> str | None:
    cmd = args.command
    if cmd == "rank":
        if args.n < 2:
            return "--n must be at least 2"
        if args.k < 0:
            return "--k must be non-negative"
        return None
    if cmd == "lcs":
        return "--depth must be at least 1" if args.depth < 1 else None
    if cmd == "counterexample":
        return "--rmax must be at least 3" if args.rmax < 3 else None
    if args.n < 3:
        return "--n must be at least 3"
    if cmd == "gen" and not 1 <= args.i <= args.n - 1:
        return f"--i must lie in 1..{args.n - 1}"
    if cmd == "tower-check" and args.rmax < 3:
        return "--rmax must be at least 3"
    for name in ("letters", "w1", "w2"):
        word = getattr(args, name, None)
        if word is not None:
            try:
                check_word(args.n, word)
            except ValueError as exc:
                return f"{name}: {exc}"
    return None


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    problem = _validate(args)
    if problem:
        parser.error(problem)  # exits with status 2
    return _dispatch(args)


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "gen":
        _matrix_out(word_matrix(args.n, (args.i,), args.ring), args.n, args.format)
        return 0
    if cmd == "word":
        _matrix_out(word_matrix(args.n, args.letters, args.ring), args.n, args.format)
        return 0
    if cmd == "verify":
        report = verify_braid_relations(args.n, args.ring)
        _emit(report)
        return 0 if report["all_pass"] else 1
    if cmd == "eq":
        equal = braid_equal(args.n, args.w1, args.w2)
        _emit({"n": args.n, "w1": list(args.w1), "w2": list(args.w2), "equal": equal})
        return 0 if equal else 1
    if cmd == "rank":
        basis = enumerate_basis(args.n, args.k)
        _emit({"n": args.n, "k": args.k, "rank": math.comb(args.n + args.k - 2, args.k),
               "basis": [list(b) for b in basis]})
        return 0
    if cmd == "tower-check":
        report = check_tower(args.n, args.rmax)
        _emit(report)
        return 0 if report["all_pass"] else 1
    if cmd == "lcs":
        group = args.preset
        layers = [{"j": j, "lattice": [list(b) for b in groups.lcs_layer(group, j)]}
                  for j in range(1, args.depth + 1)]
        cls = groups.nilpotency_class(group, args.depth)
        _emit({
            "group": group.to_json(),
            "layers": layers,
            "nilpotency_class": "exceeds max_depth" if cls is None else cls,
        })
        return 0
    if cmd == "counterexample":
        report = cx_certificate(args.rmax)
        _emit(report)
        return 0 if report["compatible"] and report["strictly_increasing"] else 1
    raise AssertionError(cmd)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
