"""Command-line front end.

Exit codes: 0 ok; 1 verification failure, table mismatch, or search miss;
2 usage error; 3 refused size guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .complexes import ComplexK, build_KW, incidence_sign, vertices_of
from .driver import (
    PAPER_SOURCED,
    ResolvedType,
    SearchFailed,
    homology_by_matchings,
    homology_by_snf,
    paper_matching,
    resolve_builtin,
    resolve_matrix,
)
from .families import complex_A, complex_D, matching_A, matching_D
from .homology import HomologyComputation
from .matching import Matching, is_acyclic, is_precise, is_weighted, validate
from .search import DEFAULT_BUDGET, prove_no_precise, search_precise
from .snf import GuardRefused
from .tables import SUITES, run_suites

OK, FAILURE, USAGE, REFUSED = 0, 1, 2, 3


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", help="built-in family (A, B, D, E, F, H, I2, tA ... tI)")
    p.add_argument("--rank", type=int, help="rank n (the bond m for I2)")
    p.add_argument("--matrix", help="Coxeter matrix file instead of a built-in type")


def _resolve(parser: argparse.ArgumentParser, args) -> ResolvedType:
    if args.matrix and args.type:
        parser.error("--type and --matrix are mutually exclusive")
    if args.matrix:
        with open(args.matrix) as fh:
            return resolve_matrix(fh.read(), name=args.matrix)
    if not args.type:
        parser.error("one of --type or --matrix is required")
    if args.rank is None:
        parser.error("--rank is required with --type")
    return resolve_builtin(args.type, args.rank)


def _simplices_json(K: ComplexK) -> list[list[list[int]]]:
    return [[list(vertices_of(m)) for m in level] for level in K.masks_by_card]


def _complex_json(rt: ResolvedType, K: ComplexK, ds: list[int]) -> dict:
    weights = []
    for d in ds:
        lev = K.weighted_level(d)
        weights.append(
            {"d": d, "values": [[lev.of(m) for m in level] for level in K.masks_by_card]}
        )
    b0 = []
    bq = []
    for k in range(1, K.top_cardinality + 1):
        rows, cols = K.masks_by_card[k - 1], K.masks_by_card[k]
        e0, eq = [], []
        for j, sigma in enumerate(cols):
            for tau in K.faces(sigma):
                i = K.index[tau][1]
                e0.append([i, j, incidence_sign(sigma, tau)])
                eq.append([i, j, str(K.boundary_entry_poly(sigma, tau))])
        b0.append({"k": k, "rows": len(rows), "cols": len(cols), "entries": e0})
        bq.append({"k": k, "rows": len(rows), "cols": len(cols), "entries": eq})
    return {
        "type": rt.name,
        "rank": rt.graph.rank,
        "vertex_labels": list(rt.graph.vertex_labels),
        "simplices": _simplices_json(K),
        "weights": weights,
        "boundary_c0": b0,
        "boundary_c": bq,
    }


def _matching_json(K: ComplexK, M: Matching, d: int, meta: dict) -> dict:
    lev = K.weighted_level(d)
    report = {"valid": validate(M, K) is None}
    report["acyclic"] = report["valid"] and is_acyclic(M, K)
    report["weighted"] = report["valid"] and is_weighted(M, lev)
    precise = None
    delta = []
    criticals = []
    if report["acyclic"] and report["weighted"]:
        pr = is_precise(M, K, lev)
        precise = pr.precise
        morse = pr.morse
        for k, level in enumerate(morse.critical):
            for m in level:
                criticals.append(
                    {"simplex": list(vertices_of(m)), "cardinality": k, "weight": lev.of(m)}
                )
        for k in range(1, len(morse.delta)):
            entries = [
                [i, j, v]
                for i, row in enumerate(morse.delta[k])
                for j, v in enumerate(row)
                if v
            ]
            if morse.critical[k] and morse.critical[k - 1]:
                delta.append(
                    {
                        "k": k,
                        "rows": len(morse.critical[k - 1]),
                        "cols": len(morse.critical[k]),
                        "entries": entries,
                    }
                )
        if not precise:
            report["witness"] = [list(w) for w in pr.witness]
    report["precise"] = precise
    return dict(
        meta,
        d=d,
        pairs=[[list(vertices_of(s)), list(vertices_of(t))] for s, t in M.pairs],
        critical=criticals,
        delta=delta,
        verification=report,
    )


def _cmd_complex(args) -> int:
    rt = args._resolved
    K = build_KW(rt.graph)
    ds = args.d if args.d else K.relevant_degrees()
    if args.dump or args.json:
        _emit_json(_complex_json(rt, K, ds))
    else:
        sizes = [len(level) for level in K.masks_by_card]
        print(f"{rt.name}: {len(K)} simplices by cardinality {sizes}")
        print(f"relevant d: {K.relevant_degrees()}")
    return OK


def _family_matching(parser, args, rt: ResolvedType, d: int):
    fam = rt.family
    if fam == "A" and (args.f or args.g):
        K = complex_A(rt.param, args.f, args.g)
        return K, matching_A(rt.param, args.f, args.g, d, K)[1], "paper"
    if fam == "D" and args.g:
        K = complex_D(rt.param, args.g)
        return K, matching_D(rt.param, args.g, d, K)[1], "paper"
    K = build_KW(rt.graph)
    if fam in PAPER_SOURCED:
        return K, paper_matching(fam, rt.param, d, K), "paper"
    res = search_precise(K, d, budget=args.budget, order_seed=args.seed)
    if not res.found:
        raise SearchFailed(rt.name, d, res.stats)
    return K, res.matching, "search"


def _cmd_matching(args) -> int:
    parser = args._parser
    rt = args._resolved
    if rt.family not in PAPER_SOURCED:
        parser.error(f"no explicit construction for {rt.name}; use the search subcommand")
    K, M, source = _family_matching(parser, args, rt, args.d)
    meta = {"type": rt.name, "rank": rt.rank, "f": args.f, "g": args.g, "source": source}
    if args.dump or args.json:
        _emit_json(_matching_json(K, M, args.d, meta))
    else:
        crit = sum(len(level) for level in M.criticals(K))
        print(f"{rt.name} d={args.d}: {len(M)} pairs, {crit} critical simplices")
    return OK


def _cmd_search(args) -> int:
    rt = args._resolved
    K = build_KW(rt.graph)
    if args.prove_absence:
        out = prove_no_precise(K, args.d, pair_cap=args.cap)
        obj = {
            "type": rt.name,
            "d": args.d,
            "candidates_checked": out.candidates_checked,
        }
        if out.certified_absent:
            obj["certificate"] = "no-precise-matching"
            _emit_json(obj)
            return OK
        obj["exists"] = [
            [list(vertices_of(s)), list(vertices_of(t))] for s, t in out.exists.pairs
        ]
        _emit_json(obj)
        return OK
    res = search_precise(K, args.d, budget=args.budget, order_seed=args.seed)
    stats = {"nodes": res.stats.nodes, "attempts": res.stats.attempts, "seed": res.stats.seed}
    if not res.found:
        _emit_json({"type": rt.name, "d": args.d, "found": False, "stats": stats})
        return FAILURE
    if args.dump or args.json:
        obj = _matching_json(K, res.matching, args.d, {"type": rt.name, "rank": rt.rank})
        obj["stats"] = stats
        obj["found"] = True
        _emit_json(obj)
    else:
        print(f"{rt.name} d={args.d}: precise matching found ({stats})")
    return OK


def _cmd_verify(args) -> int:
    parser = args._parser
    rt = args._resolved
    K, M, source = _family_matching(parser, args, rt, args.d)
    lev = K.weighted_level(args.d)
    v = validate(M, K)
    lines = [f"source: {source}", f"validate: {'ok' if v is None else v}"]
    ok = v is None
    if ok:
        acyclic = is_acyclic(M, K)
        weighted = is_weighted(M, lev)
        lines += [f"acyclic: {acyclic}", f"weighted: {weighted}"]
        ok = acyclic and weighted
        if ok:
            rep = is_precise(M, K, lev)
            lines.append(f"precise: {rep.precise}")
            if not rep.precise:
                lines.append(f"witness: {rep.witness}")
            ok = rep.precise
    print("\n".join(lines))
    return OK if ok else FAILURE


def _cmd_homology(args) -> int:
    rt = args._resolved
    comps: dict[str, HomologyComputation] = {}
    if args.method in ("matching", "both"):
        comps["matching"] = homology_by_matchings(rt, seed=args.seed, budget=args.budget)
    if args.method in ("snf", "both"):
        comps["snf"] = homology_by_snf(rt)
    if args.method == "both" and comps["matching"].result != comps["snf"].result:
        sys.stderr.write("METHOD MISMATCH between matching pipeline and SNF oracle\n")
        sys.stderr.write("matching:\n" + comps["matching"].result.render_text() + "\n")
        sys.stderr.write("snf:\n" + comps["snf"].result.render_text() + "\n")
        return FAILURE
    primary = comps.get("matching") or comps["snf"]
    if args.json:
        obj = primary.to_json_obj()
        if args.method == "both":
            obj["methods_agree"] = True
        _emit_json(obj)
    else:
        print(f"{rt.name} local homology ({'+'.join(sorted(comps))}):")
        print(primary.result.render_text())
    return OK


def _cmd_tables(args) -> int:
    names = list(SUITES) + ["criticals"] if args.suite == "all" else [args.suite]
    cells = run_suites(names, seed=args.seed, budget=args.budget, threads=args.threads)
    failed = [c for c in cells if not c.passed]
    if args.json:
        _emit_json(
            {
                "suites": names,
                "cells": [c.to_json_obj() for c in cells],
                "failed": len(failed),
            }
        )
    else:
        for c in cells:
            print(c.line())
        print(f"{len(cells) - len(failed)}/{len(cells)} cells PASS")
    return OK if not failed else FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artinhomology",
        description="Local homology of finite- and affine-type Artin groups "
        "via precise discrete Morse matchings, with an exact SNF cross-check.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complex", help="dump K_W, weights and boundary matrices")
    _add_graph_args(p)
    p.add_argument("--d", type=int, action="append", help="weight level(s); default: all relevant")
    p.add_argument("--dump", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_complex)

    p = sub.add_parser("matching", help="construct a family matching (A, D, I2, tB, tD)")
    _add_graph_args(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--f", type=int, default=0, help="leading prescribed vertices (A only)")
    p.add_argument("--g", type=int, default=0, help="trailing prescribed vertices (A and D)")
    p.add_argument("--dump", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_matching, seed=0, budget=DEFAULT_BUDGET)

    p = sub.add_parser("search", help="search a precise matching / certify nonexistence")
    _add_graph_args(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--prove-absence", action="store_true", help="exhaustive nonexistence certificate")
    p.add_argument("--cap", type=int, default=20, help="pair cap for the exhaustive enumeration")
    p.add_argument("--dump", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("verify", help="full validate/acyclic/weighted/precise pipeline")
    _add_graph_args(p)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--f", type=int, default=0)
    p.add_argument("--g", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("homology", help="assemble the local homology")
    _add_graph_args(p)
    p.add_argument("--method", choices=("matching", "snf", "both"), default="matching")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_homology)

    p = sub.add_parser("tables", help="reproduce the published tables, PASS/FAIL per cell")
    p.add_argument("--suite", choices=tuple(SUITES) + ("criticals", "all"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--threads", type=int, default=None, help="overrides ARTINHOMOLOGY_THREADS")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_tables)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._parser = parser
    if args.fn in (_cmd_complex, _cmd_matching, _cmd_search, _cmd_verify, _cmd_homology):
        args._resolved = _resolve(parser, args)
    try:
        return args.fn(args)
    except GuardRefused as exc:
        sys.stderr.write(f"guard refused: {exc}\n")
        return REFUSED
    except SearchFailed as exc:
        sys.stderr.write(f"{exc}\n")
        return FAILURE


if __name__ == "__main__":
    sys.exit(main())
