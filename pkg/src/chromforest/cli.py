"""Command-line front end.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 disagreement, 2 unreadable or invalid input, 3 limit or budget exceeded,
4 invalid partition scheme.
"""

from __future__ import annotations

import argparse
import importlib
import json
import random
import sys
from dataclasses import replace
from fractions import Fraction

from . import chromatic, polymer, potts, schemes
from .errors import (
    BudgetExceededError,
    ChromForestError,
    GraphFormatError,
    GraphTooLargeError,
    Limits,
    NonSimpleGraphError,
    SchemeInvalidError,
    limits_from_env,
)
from .generators import demo
from .graph import Graph, enumerate_connected_subsets, popcount
from .io import FORMATS, apply_edge_order, load_graph

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_PARSE = 2
EXIT_LIMIT = 3
EXIT_SCHEME = 4

METHODS = ("classical", "whitney", "scheme", "polymer", "deletion-contraction", "brute")


# ----------------------------------------------------------------- helpers
def resolve_scheme(name: str) -> schemes.SchemeMap:
    """Built-in scheme name, or ``module:attr`` naming a SchemeMap, SchemeMap class, or map function."""
    if ":" not in name:
        return schemes.get_scheme(name)
    module_name, attr = name.split(":", 1)
    obj = getattr(importlib.import_module(module_name), attr)
    if isinstance(obj, type) and issubclass(obj, schemes.SchemeMap):
        obj = obj()
    if isinstance(obj, schemes.SchemeMap):
        return obj
    if callable(obj):
        return schemes.CustomScheme(obj, name=name)
    raise ValueError(f"{name} is not a scheme")


def _limits(args) -> Limits:
    lim = limits_from_env()
    if getattr(args, "max_vertices", None) is not None:
        lim = replace(lim, max_vertices=args.max_vertices)
    if getattr(args, "max_edges", None) is not None:
        lim = replace(lim, max_edges=args.max_edges)
    if getattr(args, "budget", None) is not None:
        lim = replace(lim, coloring_budget=args.budget)
    return lim


def _graph(args) -> Graph:
    if args.demo:
        g = demo(args.demo)
    elif args.input:
        g = load_graph(args.input, args.format)
    else:
        raise GraphFormatError("give --input FILE or --demo NAME")
    if args.edge_order:
        try:
            with open(args.edge_order) as fh:
                g = apply_edge_order(g, fh.read())
        except OSError as exc:
            raise GraphFormatError(f"cannot read {args.edge_order}: {exc}") from exc
    return g


def compute_polynomial(g: Graph, method: str, scheme: str | None, lim: Limits):
    if method == "classical":
        return chromatic.chromatic_classical(g, lim)
    if method == "whitney":
        return chromatic.chromatic_whitney(g, lim)
    if method == "scheme":
        return chromatic.chromatic_scheme(g, resolve_scheme(scheme), lim)
    if method == "polymer":
        return polymer.chromatic_via_polymer(g, lim)
    if method == "deletion-contraction":
        return chromatic.deletion_contraction(g, lim)
    if method == "brute":
        return chromatic.chromatic_brute(g, lim)
    raise ValueError(f"unknown method {method!r}")


def _emit(obj, out_format: str, text: str) -> None:
    if out_format == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------- commands
def cmd_compute(args) -> int:
    if args.method == "scheme" and not args.scheme:
        raise GraphFormatError("--method scheme requires --scheme")
    if args.method != "scheme" and args.scheme:
        raise GraphFormatError("--scheme only applies to --method scheme")
    g = _graph(args)
    p = compute_polynomial(g, args.method, args.scheme, _limits(args))
    _emit(p.to_dict(), args.out, f"P(q) = {p}\ncoefficients (ascending): {list(p.coefficients) or [0]}")
    return EXIT_OK


def _verify_report(g: Graph, args, lim: Limits) -> tuple[dict, bool]:
    report: dict = {"graph": {"vertices": g.n, "edges": g.m}, "methods": {}, "checks": {}}
    ok = True
    scheme_objs = [resolve_scheme(name) for name in args.schemes.split(",") if name]
    routes = {
        "classical": lambda: chromatic.chromatic_classical(g, lim),
        "whitney": lambda: chromatic.chromatic_whitney(g, lim),
        "polymer": lambda: polymer.chromatic_via_polymer(g, lim),
        "deletion-contraction": lambda: chromatic.deletion_contraction(g, lim),
    }
    for m in scheme_objs:
        routes[f"scheme:{m.kind}"] = lambda m=m: chromatic.chromatic_scheme(g, m, lim)
    results = {name: fn() for name, fn in routes.items()}
    for name, p in results.items():
        report["methods"][name] = p.to_dict()
    names = list(results)
    matrix = {a: {b: results[a] == results[b] for b in names} for a in names}
    report["agreement"] = matrix
    if not all(all(row.values()) for row in matrix.values()):
        ok = False
    reference = results["classical"]

    evaluations = {}
    for q in range(g.n + 2):
        try:
            count = chromatic.count_proper_colorings(g, q, lim)
        except BudgetExceededError:
            evaluations[str(q)] = "skipped (budget)"
            continue
        evaluations[str(q)] = {"count": count, "P(q)": reference(q), "equal": count == reference(q)}
        ok &= count == reference(q)
    report["checks"]["coloring_counts"] = evaluations

    rng = random.Random(args.seed)
    components = [c for c in enumerate_connected_subsets(g, lim) if _is_component(g, c.mask)]
    for m in scheme_objs:
        validations, penrose = [], []
        for comp in components:
            sub, _ = g.induced(comp.mask)
            rep = schemes.validate_scheme(sub, m, lim)
            validations.append(rep.valid)
            if not rep.valid:
                raise SchemeInvalidError(rep.message, rep.witness, rep.coverage)
            for _ in range(args.penrose_trials):
                w = [Fraction(rng.randint(-20, 20), rng.randint(1, 10)) for _ in range(sub.m)]
                penrose.append(schemes.check_penrose_identity(sub, w, m, limits=lim).equal)
        report["checks"][f"validate:{m.kind}"] = all(validations)
        report["checks"][f"penrose_identity:{m.kind}"] = all(penrose)
        ok &= all(validations) and all(penrose)

    mayer = []
    for vm in range(1, 1 << g.n):
        k = popcount(vm)
        if 2 <= k <= min(5, g.n):
            for q in (2, 3):
                if q**k <= lim.coloring_budget:
                    mayer.append(potts.check_mayer_identity(g, vm, q, lim).equal)
    report["checks"]["mayer_identity"] = {"cases": len(mayer), "all_equal": all(mayer)}
    ok &= all(mayer)
    report["ok"] = ok
    return report, ok


def _is_component(g: Graph, vm: int) -> bool:
    """Connected vertex set with no edge leaving it."""
    for u, v in g.edges:
        if ((vm >> u) & 1) != ((vm >> v) & 1):
            return False
    return True


def cmd_verify(args) -> int:
    g = _graph(args)
    lim = _limits(args)
    lim.check_vertices(g.n, "verify")
    report, ok = _verify_report(g, args, lim)
    if args.out == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(f"graph: {g.n} vertices, {g.m} edges")
        for name, p in report["methods"].items():
            print(f"  {name:<24} {p['coefficients']}")
        names = list(report["agreement"])
        print("agreement matrix:")
        for a in names:
            print(f"  {a:<24} " + " ".join("Y" if report["agreement"][a][b] else "N" for b in names))
        for key, value in report["checks"].items():
            if key == "coloring_counts":
                good = all(v["equal"] for v in value.values() if isinstance(v, dict))
                print(f"  coloring counts at q=0..{g.n + 1}: {'pass' if good else 'FAIL'}")
            elif isinstance(value, dict):
                print(f"  {key}: {'pass' if value['all_equal'] else 'FAIL'} ({value['cases']} cases)")
            else:
                print(f"  {key}: {'pass' if value else 'FAIL'}")
        print("ALL AGREE" if ok else "DISAGREEMENT")
    if not ok:
        print(json.dumps(report, sort_keys=True), file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_forests(args) -> int:
    g = _graph(args)
    lim = _limits(args)
    rows = []
    sets = {}
    rng = random.Random(args.seed)
    variants = [(name, g) for name in args.schemes.split(",") if name]
    for k in range(args.random_orders):
        perm = list(range(g.m))
        rng.shuffle(perm)
        variants.append((f"minimal-tree@order{k + 1}", g.with_permuted_order(perm)))
    for label, host in variants:
        m = resolve_scheme(label.split("@")[0])
        counts = chromatic.forest_level_counts(host, m, lim)
        masks = chromatic.scheme_forest_masks(host, m, lim)
        # compare sets by labelled edges since edge ranks differ across orders
        sets[label] = frozenset(frozenset(host.labelled_edge(i) for i in range(host.m) if (f >> i) & 1) for f in masks)
        rows.append({"scheme": label, "counts": list(counts.counts)})
    all_counts_equal = len({tuple(r["counts"]) for r in rows}) <= 1
    sets_differ = len(set(sets.values())) > 1
    result = {"rows": rows, "counts_agree": all_counts_equal, "forest_sets_differ": sets_differ}
    if args.out == "json":
        print(json.dumps(result, sort_keys=True))
    else:
        for r in rows:
            print(f"{r['scheme']:<28} N = {tuple(r['counts'])}")
        print(f"counts agree: {all_counts_equal}; forest sets differ: {sets_differ}")
    return EXIT_OK if all_counts_equal else EXIT_DISAGREE


def cmd_xi(args) -> int:
    g = _graph(args)
    x = polymer.xi(g, _limits(args))
    _emit(x.to_dict(), args.out, f"Xi(q) = {x}")
    return EXIT_OK


def cmd_activities(args) -> int:
    g = _graph(args)
    table = polymer.activity_table(g, _limits(args))
    rows = [
        {"polymer": sorted(g.mask_labels(r), key=str), "numerator": a.numerator, "exponent": a.exponent}
        for r, a in sorted(table.items(), key=lambda kv: (popcount(kv[0]), kv[0]))
    ]
    if args.out == "json":
        print(json.dumps(rows, sort_keys=True, default=str))
    else:
        for row in rows:
            print(f"{{{', '.join(map(str, row['polymer']))}}}: {row['numerator']}/q^{row['exponent']}")
    return EXIT_OK


def cmd_potts(args) -> int:
    g = _graph(args)
    betas = [float(b) for b in args.betas.split(",")]
    rows = potts.partition_table(g, args.q, args.J, betas, _limits(args))
    if args.out == "json":
        print(json.dumps(rows, sort_keys=True))
    else:
        for row in rows:
            print(f"q={row['q']} beta={row['beta']} J={row['J']} Z={row['Z']!r}")
    return EXIT_OK


# ------------------------------------------------------------------ parser
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromforest", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        p.add_argument("--input", help="graph file")
        p.add_argument("--format", choices=FORMATS, help="input format (default: from extension)")
        p.add_argument("--demo", help="built-in graph: K<n>, C<n>, P<n>, S<n>, E<n>")
        p.add_argument("--edge-order", help="file listing every edge once, smallest first")
        p.add_argument("--max-vertices", type=int, help="enumeration vertex limit")
        p.add_argument("--max-edges", type=int, help="enumeration edge limit")
        p.add_argument("--budget", type=int, help="configuration budget for coloring enumeration")
        if out:
            p.add_argument("--out", choices=("text", "json"), default="text")

    p = sub.add_parser("compute", help="chromatic polynomial by one method")
    common(p)
    p.add_argument("--method", choices=METHODS, default="whitney")
    p.add_argument("--scheme", help="minimal-tree, penrose, or module:attr (with --method scheme)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="cross-check every method and identity")
    common(p)
    p.add_argument("--schemes", default="minimal-tree,penrose")
    p.add_argument("--penrose-trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("forests", help="closed-forest counts per scheme")
    common(p)
    p.add_argument("--schemes", default="minimal-tree,penrose")
    p.add_argument("--random-orders", type=int, default=0, help="extra minimal-tree runs under shuffled edge orders")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_forests)

    p = sub.add_parser("xi", help="polymer partition function in powers of 1/q")
    common(p)
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("activities", help="activity of every polymer")
    common(p)
    p.set_defaults(func=cmd_activities)

    p = sub.add_parser("potts", help="Potts partition function over a beta grid")
    common(p)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--J", type=float, default=-1.0)
    p.add_argument("--betas", default="0,0.5,1,2", help="comma-separated; 'inf' allowed for J<0")
    p.set_defaults(func=cmd_potts)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, NonSimpleGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (GraphTooLargeError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except SchemeInvalidError as exc:
        print(f"error: invalid partition scheme: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"witness: {list(exc.witness.edges)} (covered {exc.coverage} times)", file=sys.stderr)
        return EXIT_SCHEME
    except (ChromForestError, KeyError, ValueError, ImportError, AttributeError) as exc:
        # remaining failures are bad input: unknown scheme, disconnected graph, bad value
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
