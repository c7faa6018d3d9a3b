"""Command-line front end.

Verbs: dist, spectrum, balance, compat, classify, gen, verify.  Input is
always an edge-list file; output is CSV (matrices only) or JSON.

Exit codes: 0 ok; 1 input/validation error; 2 requested the common signed
distance matrix of an incompatible graph (witness pair on stderr);
3 a theorem-verification suite failed, which means an implementation bug;
4 suite precondition unmet.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .balance import (
    balance_spectral_distance,
    balance_via_associated_complete,
    classify,
    is_balanced,
)
from .core import SignedGraph, is_bipartite, switch
from .blocks import block_subgraphs
from .distance import incompatible_pairs, is_compatible
from .edgelist import format_edge_list, parse_edge_list
from .errors import NotCompatibleError, SignedGraphError
from .families import (
    complete_bipartite,
    kneser_graph,
    neg_rim_wheel,
    positive_cycle,
    signed_join,
    unbalanced_cycle,
)
from .matrices import (
    associated_complete,
    d_max_matrix,
    d_min_matrix,
    d_pm_matrix,
    matrix_to_csv,
    matrix_to_json_dict,
    unsigned_distance_matrix,
)
from .spectra import eig_sym

SWITCHING_TRIALS = 20
SWITCHING_TOL = 1e-9


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1), not the incompatible-matrix code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="sgdist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def add_input(p):
        p.add_argument("input", help="edge-list file")

    def add_out(p):
        p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("dist", help="signed/unsigned distance matrix")
    add_input(p)
    p.add_argument("--which", choices=("max", "min", "pm", "unsigned"), default="pm")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_out(p)
    p.set_defaults(handler=_cmd_dist)

    p = sub.add_parser("spectrum", help="eigenvalues of a distance matrix")
    add_input(p)
    p.add_argument("--which", choices=("max", "min", "pm", "unsigned"), default="pm")
    add_out(p)
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("balance", help="balance report with bipartition/witness")
    add_input(p)
    add_out(p)
    p.set_defaults(handler=_cmd_balance)

    p = sub.add_parser("compat", help="distance-compatibility check")
    add_input(p)
    add_out(p)
    p.set_defaults(handler=_cmd_compat)

    p = sub.add_parser("classify", help="class I/II/III taxonomy")
    add_input(p)
    add_out(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("gen", help="generate a family member as an edge list")
    p.add_argument("family", choices=("cycle", "wheel", "bipartite", "join"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--unbalanced", action="store_true",
                   help="cycle only: make the closing edge negative (odd n)")
    add_out(p)
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("verify", help="run a theorem-verification suite")
    add_input(p)
    p.add_argument("--suite", choices=("gen", "dbal", "bipartite", "blocks", "switching"),
                   required=True)
    p.add_argument("--seed", type=int, default=0,
                   help="rng seed for the switching suite (default 0)")
    add_out(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def _load(path: str) -> SignedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out: str | None):
    _emit(json.dumps(obj, indent=2) + "\n", out)


def _matrix(g: SignedGraph, which: str) -> np.ndarray:
    if which == "max":
        return d_max_matrix(g)
    if which == "min":
        return d_min_matrix(g)
    if which == "unsigned":
        return unsigned_distance_matrix(g)
    return d_pm_matrix(g)


def _cmd_dist(args) -> int:
    g = _load(args.input)
    m = _matrix(g, args.which)
    if args.format == "csv":
        _emit(matrix_to_csv(m), args.out)
    else:
        _emit_json(matrix_to_json_dict(m), args.out)
    return 0


def _cmd_spectrum(args) -> int:
    g = _load(args.input)
    _emit_json(eig_sym(_matrix(g, args.which)).to_json_dict(), args.out)
    return 0


def _cmd_balance(args) -> int:
    g = _load(args.input)
    report = is_balanced(g)
    obj = {
        "balanced": report.balanced,
        "V1": list(report.bipartition[0]) if report.bipartition else None,
        "V2": list(report.bipartition[1]) if report.bipartition else None,
        "witness": list(report.witness) if report.witness else None,
    }
    _emit_json(obj, args.out)
    return 0


def _cmd_compat(args) -> int:
    g = _load(args.input)
    bad = incompatible_pairs(g)
    obj = {
        "compatible": not bad,
        "witness": list(bad[0]) if bad else None,
    }
    _emit_json(obj, args.out)
    return 0


def _cmd_classify(args) -> int:
    g = _load(args.input)
    label = classify(g)
    obj = {
        "label": label.label,
        "reasons": sorted(label.reasons),
        "compatible": is_compatible(g),
    }
    _emit_json(obj, args.out)
    return 0


def _cmd_gen(args) -> int:
    if args.unbalanced and args.family != "cycle":
        raise SignedGraphError("--unbalanced applies to the cycle family only")
    if args.family == "cycle":
        g = unbalanced_cycle(args.n) if args.unbalanced else positive_cycle(args.n)
    elif args.family == "wheel":
        g = neg_rim_wheel(args.n)
    elif args.family == "bipartite":
        g = complete_bipartite(args.n, args.n)
    else:
        part = kneser_graph(args.n, 2)
        g = signed_join(part, part)
    _emit(format_edge_list(g), args.out)
    return 0


# -- verification suites ---------------------------------------------------


def _suite_gen(g: SignedGraph, seed: int):
    balanced = is_balanced(g).balanced
    amax = balance_via_associated_complete(g, "max")
    amin = balance_via_associated_complete(g, "min")
    compat = is_compatible(g)
    pm = compat and is_balanced(associated_complete(g, "max")).balanced
    statements = {
        "balanced": balanced,
        "assoc_complete_max_balanced": amax,
        "assoc_complete_min_balanced": amin,
        "compatible_and_common_complete_balanced": pm,
    }
    ok = len(set(statements.values())) == 1
    return {"suite": "gen", "statements": statements, "pass": ok}, ok


def _suite_dbal(g: SignedGraph, seed: int):
    balanced = is_balanced(g).balanced
    statements = {"balanced": balanced}
    for mode in ("cospectral_max", "cospectral_min", "largest_max", "largest_min"):
        statements[mode] = balance_spectral_distance(g, mode)
    ok = len(set(statements.values())) == 1
    return {"suite": "dbal", "statements": statements, "pass": ok}, ok


def _suite_bipartite(g: SignedGraph, seed: int):
    balanced = is_balanced(g).balanced
    compat = is_compatible(g)
    ok = balanced == compat
    return {
        "suite": "bipartite",
        "statements": {"balanced": balanced, "compatible": compat},
        "pass": ok,
    }, ok


def _suite_blocks(g: SignedGraph, seed: int):
    whole = is_compatible(g)
    per_block = []
    for sub, labels in block_subgraphs(g):
        per_block.append({"vertices": list(labels), "compatible": is_compatible(sub)})
    ok = whole == all(b["compatible"] for b in per_block)
    return {
        "suite": "blocks",
        "statements": {"compatible": whole, "blocks": per_block},
        "pass": ok,
    }, ok


def _suite_switching(g: SignedGraph, seed: int):
    base = d_pm_matrix(g)
    base_spec = eig_sym(base).eigenvalues
    rng = np.random.default_rng(seed)
    matrices_equal = True
    max_diff = 0.0
    for _ in range(SWITCHING_TRIALS):
        zeta = 1 - 2 * rng.integers(0, 2, size=g.n)
        switched = d_pm_matrix(switch(g, [int(z) for z in zeta]))
        expected = zeta[:, None] * base * zeta[None, :]
        if not np.array_equal(switched, expected):
            matrices_equal = False
        spec = eig_sym(switched).eigenvalues
        max_diff = max(max_diff, max(abs(a - b) for a, b in zip(spec, base_spec)))
    ok = matrices_equal and max_diff <= SWITCHING_TOL
    return {
        "suite": "switching",
        "seed": seed,
        "trials": SWITCHING_TRIALS,
        "statements": {
            "conjugation_exact": matrices_equal,
            "max_spectrum_diff": max_diff,
        },
        "pass": ok,
    }, ok


_SUITES = {
    "gen": (_suite_gen, None),
    "dbal": (_suite_dbal, None),
    "bipartite": (_suite_bipartite, "input graph is not bipartite"),
    "blocks": (_suite_blocks, None),
    "switching": (_suite_switching, "input graph is not distance-compatible"),
}


def _cmd_verify(args) -> int:
    g = _load(args.input)
    run, precondition_msg = _SUITES[args.suite]
    if args.suite == "bipartite" and not is_bipartite(g):
        print(f"precondition unmet: {precondition_msg}", file=sys.stderr)
        return 4
    if args.suite == "switching" and not is_compatible(g):
        print(f"precondition unmet: {precondition_msg}", file=sys.stderr)
        return 4
    report, ok = run(g, args.seed)
    _emit_json(report, args.out)
    return 0 if ok else 3


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except NotCompatibleError as exc:
        u, v = exc.witness
        print(f"{u} {v}", file=sys.stderr)
        return 2
    except (SignedGraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
