"""Command-line interface.

Graphs are exchanged in a DIMACS-like text format ("p edge n m" header,
"e u v" lines, 1-based).  Machine-readable results go to stdout as a
single JSON object with sorted keys (so reruns are byte-identical); a
short human summary goes to stderr.  Exit status: 0 for a positive
result, 1 for a definite negative one (non-membership, failed
recognition or verification), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cutset import Leaf, decompose, tree_violations
from .graph import Graph, GraphError, bits, read_dimacs, write_dimacs
from .oracle import OracleCapExceeded, brute_chromatic, brute_max_clique, brute_mwis
from .patterns import class_membership
from .recognize import RecognitionError, certificate_to_dict, recognize_atom
from .solvers import max_weight_clique, min_coloring, mwis
from . import forge

SCHEMA = 1


def _emit(obj, summary: str) -> None:
    obj = dict(obj)
    obj["schema"] = SCHEMA
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
    sys.stderr.write(summary + "\n")


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return read_dimacs(text)


def _read_weights(path: str | None, n: int):
    if path is None:
        return [Fraction(1)] * n
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if len(lines) != n:
        raise ValueError(f"expected {n} weights, got {len(lines)}")
    return [Fraction(ln) for ln in lines]


def _weight_str(x) -> str:
    return str(Fraction(x))


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    report = class_membership(g)
    viol = {k: list(v) for k, v in report.violations().items()}
    _emit(
        {"member": report.is_member, "violations": viol, "n": g.n, "m": g.m},
        f"{'member' if report.is_member else 'NOT a member'} (n={g.n}, m={g.m})",
    )
    return 0 if report.is_member else 1


def _tree_to_dict(node):
    if isinstance(node, Leaf):
        return {"atom": sorted(bits(node.mask))}
    return {
        "cutset": sorted(bits(node.cutset)),
        "left": _tree_to_dict(node.left),
        "right": _tree_to_dict(node.right),
    }


def cmd_decompose(args) -> int:
    g = _read_graph(args.graph)
    tree = decompose(g)
    bad = tree_violations(g, tree)
    atoms = [sorted(bits(leaf.mask)) for leaf in tree.leaves()]
    _emit(
        {"tree": _tree_to_dict(tree), "atoms": atoms, "violations": bad},
        f"{len(atoms)} atom(s)" + (" with violations!" if bad else ""),
    )
    return 1 if bad else 0


def cmd_recognize(args) -> int:
    g = _read_graph(args.graph)
    try:
        cert = recognize_atom(g)
    except RecognitionError as exc:
        _emit({"recognized": False, "reasons": exc.reasons}, "not a recognized atom")
        return 1
    _emit(
        {"recognized": True, "certificate": certificate_to_dict(cert)},
        f"atom kind: {cert.kind}",
    )
    return 0


def cmd_color(args) -> int:
    g = _read_graph(args.graph)
    try:
        colors, k = min_coloring(g)
    except (ValueError, RecognitionError) as exc:
        _emit({"error": str(exc)}, f"coloring failed: {exc}")
        return 1
    assert all(colors[u] != colors[v] for u, v in g.edges())
    _emit({"colors": colors, "count": k}, f"chromatic number {k}")
    return 0


def cmd_mwis(args) -> int:
    g = _read_graph(args.graph)
    w = _read_weights(args.weights, g.n)
    members, value = mwis(g, w)
    _emit(
        {"stable_set": members, "weight": _weight_str(value)},
        f"stable set of weight {value} with {len(members)} vertices",
    )
    return 0


def cmd_clique(args) -> int:
    g = _read_graph(args.graph)
    w = _read_weights(args.weights, g.n)
    members, value = max_weight_clique(g, w)
    _emit(
        {"clique": members, "weight": _weight_str(value)},
        f"clique of weight {value} with {len(members)} vertices",
    )
    return 0


_GEN_KINDS = {
    "bracelet": forge.random_bracelet,
    "emerald": forge.random_emerald,
    "lantern": forge.random_lantern,
    "wreath": forge.random_wreath,
    "ring": forge.random_ring,
    "crown": forge.random_crown,
    "atom": forge.random_atom,
    "member": forge.random_member_graph,
}


def cmd_gen(args) -> int:
    g = _GEN_KINDS[args.kind](args.seed)
    sys.stdout.write(write_dimacs(g))
    sys.stderr.write(f"generated {args.kind} with n={g.n}, m={g.m}\n")
    return 0


def cmd_verify(args) -> int:
    """End-to-end self check of one input graph."""
    g = _read_graph(args.graph)
    checks = {}
    report = class_membership(g)
    checks["member"] = report.is_member
    if not report.is_member:
        _emit(
            {"ok": False, "checks": checks,
             "violations": {k: list(v) for k, v in report.violations().items()}},
            "verify: not a member",
        )
        return 1
    tree = decompose(g)
    checks["decomposition"] = not tree_violations(g, tree)
    atoms_ok = True
    for leaf in tree.leaves():
        try:
            recognize_atom(leaf.graph)
        except RecognitionError:
            atoms_ok = False
    checks["atoms_recognized"] = atoms_ok
    colors, k = min_coloring(g)
    checks["coloring_proper"] = all(colors[u] != colors[v] for u, v in g.edges())
    results = {"chromatic": k}
    if g.n <= args.max_oracle:
        try:
            checks["coloring_optimal"] = k == brute_chromatic(g, cap=args.max_oracle)
            w = [Fraction(1)] * g.n
            checks["stable_set_optimal"] = (
                mwis(g, w)[1] == brute_mwis(g, w, cap=args.max_oracle)[1]
            )
            checks["clique_optimal"] = (
                max_weight_clique(g, w)[1]
                == brute_max_clique(g, w, cap=args.max_oracle)[1]
            )
        except OracleCapExceeded:
            pass
    ok = all(checks.values())
    _emit(
        {"ok": ok, "checks": checks, "results": results},
        f"verify: {'ok' if ok else 'FAILED'} ({', '.join(sorted(checks))})",
    )
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="p7c4c5",
        description="Exact algorithms for a class of graphs with no short "
        "even holes and no long induced paths.",
    )
    ap.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="parallelism hint; accepted for compatibility, results are "
        "identical for any value",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, graph=True, weights=False):
        p = sub.add_parser(name, help=help_text)
        if graph:
            p.add_argument("graph", help="input graph file ('-' for stdin)")
        if weights:
            p.add_argument(
                "--weights",
                default=None,
                help="file with one rational weight per line",
            )
        p.set_defaults(fn=fn)
        return p

    add("check", cmd_check, "test class membership, report witnesses")
    add("decompose", cmd_decompose, "clique-cutset decomposition into atoms")
    add("recognize", cmd_recognize, "certify an atom and name its kind")
    add("color", cmd_color, "minimum proper coloring")
    add("mwis", cmd_mwis, "maximum-weight stable set", weights=True)
    add("clique", cmd_clique, "maximum-weight clique", weights=True)
    p = add("gen", cmd_gen, "generate a test instance", graph=False)
    p.add_argument("kind", choices=sorted(_GEN_KINDS))
    p.add_argument("--seed", type=int, default=0)
    p = add("verify", cmd_verify, "run the full self-check on one graph")
    p.add_argument(
        "--max-oracle",
        type=int,
        default=12,
        help="largest size for brute-force cross checks",
    )
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
