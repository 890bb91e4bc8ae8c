"""Command line entry point: ``dbraid centre|normalize|toric|tables|nctorus``."""
from __future__ import annotations

import argparse
import json
import random
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from . import tables as tbl
from .braid import BraidContext, IndexOutOfRange, WordSyntaxError, normal_form, parse_word, words_equal
from .centre import (
    TorusCharacter,
    centre_group,
    centre_rank_formula,
    characters,
    character_value,
    cross_check_torsion,
    presentation,
)
from .nctorus import IrrationalAngle, nc_parameters, verify_projectors
from .scheme import SchemeError, analyze_graph, load_scheme, random_scheme, validate_scheme
from .toric import (
    MalformedInput as PolytopeInputError,
    PolytopeError,
    assign_degrees,
    chop_vertex,
    facet_graph,
    load_polytope,
)
from .zlinalg import FgAbGroup

OK, INVALID, STRUCTURAL, MISMATCH = 0, 2, 3, 4


class CommandError(Exception):
    def __init__(self, msg: str, code: int):
        super().__init__(msg)
        self.code = code


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def group_json(G: FgAbGroup) -> dict:
    return {
        "rank": G.rank,
        "invariant_factors": list(G.invariant_factors),
        "order": f"finite:{G.order}" if G.is_finite else "infinite",
    }


def group_text(G: FgAbGroup) -> str:
    tors = " + ".join(f"Z_{d}" for d in G.invariant_factors) or "trivial torsion"
    return f"rank {G.rank}, {tors}"


def _centre_report(args, scheme) -> int:
    ctx = presentation(scheme)
    G = ctx.group
    payload = group_json(G)
    payload["crosscheck"] = None
    lines = [group_text(G)]
    code = OK
    if args.crosscheck:
        rep = cross_check_torsion(scheme)
        payload["crosscheck"] = rep.to_json()
        lines.append(f"crosscheck N={rep.exponent_used}: {'agree' if rep.agree else 'DISAGREE'}")
        if not rep.agree:
            code = MISMATCH
    if args.characters:
        chars = []
        for n, chi in enumerate(characters(G)):
            if n >= args.limit:
                break
            vals = {f"{a},{b}": str(character_value(chi, ctx.generator(a, b))) for a, b in scheme.edges}
            chars.append({"residues": list(chi.residues), "edge_values": vals})
        payload["characters"] = {"count": G.torsion_order, "shown": chars}
        lines.append(f"{G.torsion_order} torsion characters, showing {len(chars)}")
        for c in chars:
            vals = " ".join(f"b[{k}]={v}" for k, v in c["edge_values"].items())
            lines.append(f"  {tuple(c['residues'])}: {vals}")
    _emit(args, payload, "\n".join(lines))
    return code


def cmd_centre(args) -> int:
    return _centre_report(args, load_scheme(args.scheme))


def _read_word(arg: str) -> str:
    if arg.startswith("@"):
        return Path(arg[1:]).read_text()
    return arg


def cmd_normalize(args) -> int:
    scheme = load_scheme(args.scheme)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ctx = BraidContext(scheme, args.genus)
        w = parse_word(_read_word(args.word), ctx)
        if args.equal is not None:
            v = parse_word(_read_word(args.equal), ctx)
            eq = words_equal(w, v)
            _emit(args, {"equal": eq}, "true" if eq else "false")
            return OK
    nf = normal_form(w)
    payload = nf.to_json()
    text = "M = " + json.dumps(payload["M"]) + "\ncentral = " + json.dumps(payload["central_canonical"])
    _emit(args, payload, text)
    return OK


def cmd_toric(args) -> int:
    p = load_polytope(args.polytope)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for v in args.chop:
            p = chop_vertex(p, v)
    edges = facet_graph(p)
    if args.degrees is None:
        scheme = validate_scheme(p.n_facets, edges, [1] * p.n_facets)
        ga = analyze_graph(scheme)
        payload = {
            "facets": p.n_facets,
            "vertices": p.n_vertices,
            "edges": [list(e) for e in edges],
            "bipartite": ga.bipartite,
            "connected": ga.connected,
        }
        text = f"{p.n_facets} facets, {p.n_vertices} vertices\nedges: " + " ".join(f"{a}-{b}" for a, b in edges)
        text += f"\nbipartite: {str(ga.bipartite).lower()}"
        _emit(args, payload, text)
        return OK
    return _centre_report(args, assign_degrees(p, args.degrees))


def cmd_tables(args) -> int:
    if args.which == "random":
        return _random_checks(args)
    results = []
    code = OK
    for fam in tbl.families(args.which):
        edges = fam.edges
        if args.search:
            edges, _ = tbl.search_labelling(fam)
        for res in tbl.compute_family(fam, edges):
            results.append((fam, edges, res))
            if not res.ok:
                code = MISMATCH
    payload = {
        "table": args.which,
        "rows": [r.to_json() | {"edges": [list(e) for e in edges]} for _, edges, r in results],
        "all_match": code == OK,
    }
    lines = []
    last = None
    for fam, edges, r in results:
        if fam.name != last:
            lines.append(f"# {fam.name}: {fam.graph}; edges " + " ".join(f"{a}-{b}" for a, b in edges))
            lines.append(f"{'degrees':<34} {'computed':<44} {'expected':<44} {'formula':>8}  ok")
            last = fam.name
        k = "(" + ",".join(map(str, r.row.degrees)) + ")"
        f = "" if r.formula is None else str(r.formula)
        lines.append(
            f"{k:<34} {group_text(r.computed):<44} {group_text(r.expected):<44} {f:>8}  {'yes' if r.ok else 'NO'}"
        )
        if r.row.note:
            lines.append(f"    note: {r.row.note}")
    _emit(args, payload, "\n".join(lines))
    return code


def _random_checks(args) -> int:
    rng = random.Random(args.seed)
    bad = []
    for _ in range(args.count):
        scheme = random_scheme(rng, r_max=6, max_edges=12, k_range=(2, 6), connected=False)
        G = centre_group(scheme)
        rep = cross_check_torsion(scheme)
        if G.rank != centre_rank_formula(scheme) or not rep.agree:
            bad.append(scheme.to_json())
    payload = {"seed": args.seed, "count": args.count, "failures": bad}
    _emit(args, payload, f"seed {args.seed}: {args.count - len(bad)}/{args.count} random schemes agree")
    return MISMATCH if bad else OK


def cmd_nctorus(args) -> int:
    if args.projectors is not None:
        rep = verify_projectors(args.projectors)
        payload = {
            "k": rep.k,
            "idempotent_error": rep.idempotent_error,
            "orthogonality_error": rep.orthogonality_error,
            "completeness_error": rep.completeness_error,
            "ok": rep.ok,
        }
        _emit(args, payload, f"k={rep.k}: {'ok' if rep.ok else 'FAILED'}")
        return OK if rep.ok else MISMATCH
    if args.scheme is None:
        raise CommandError("a scheme file is needed unless --projectors is given", INVALID)
    scheme = load_scheme(args.scheme)
    G = centre_group(scheme)
    residues = args.character or [0] * len(G.invariant_factors)
    try:
        angles = tuple(Fraction(a) for a in (args.angles or []))
    except (ValueError, ZeroDivisionError):
        raise IrrationalAngle(f"angles must be exact rationals, got {args.angles}") from None
    chi = TorusCharacter(G, tuple(residues), angles)
    params = nc_parameters(scheme, args.genus, chi)
    payload = params.to_json()
    text = "\n".join(" ".join(f"{x!s:>6}" for x in row) for row in params.theta)
    _emit(args, payload, text)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=0)

    centre_flags = argparse.ArgumentParser(add_help=False)
    centre_flags.add_argument("--crosscheck", action="store_true", help="recompute torsion by the Diophantine route")
    centre_flags.add_argument("--characters", action="store_true", help="list torsion characters")
    centre_flags.add_argument("--limit", type=int, default=64, help="most characters to list")

    p = argparse.ArgumentParser(prog="dbraid", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("centre", parents=[common, centre_flags], help="centre of a colour scheme")
    c.add_argument("scheme")
    c.set_defaults(func=cmd_centre)

    n = sub.add_parser("normalize", parents=[common], help="normal form of a braid word")
    n.add_argument("scheme")
    n.add_argument("word", help="word text, or @file")
    n.add_argument("--genus", type=int, default=1)
    n.add_argument("--equal", metavar="WORD", help="compare with a second word instead")
    n.set_defaults(func=cmd_normalize)

    t = sub.add_parser("toric", parents=[common, centre_flags], help="facet graph of a (chopped) polytope")
    t.add_argument("polytope", help="polytope file or one of: interval, square, cube")
    t.add_argument("--chop", type=int, action="append", default=[], metavar="VERTEX")
    t.add_argument("--degrees", type=int, nargs="+")
    t.set_defaults(func=cmd_toric)

    tb = sub.add_parser("tables", parents=[common], help="recompute the example tables")
    tb.add_argument("which", choices=("pentagon", "tree", "fig10", "random"))
    tb.add_argument("--search", action="store_true", help="search relabellings of the graph first")
    tb.add_argument("--count", type=int, default=100, help="schemes to draw for 'random'")
    tb.set_defaults(func=cmd_tables)

    nc = sub.add_parser("nctorus", parents=[common], help="noncommutative torus parameters")
    nc.add_argument("scheme", nargs="?")
    nc.add_argument("--genus", type=int, default=1)
    nc.add_argument("--character", type=int, nargs="+", metavar="J")
    nc.add_argument("--angles", nargs="+", metavar="P/Q")
    nc.add_argument("--projectors", type=int, metavar="K", help="check the projector identities over Z_K")
    nc.set_defaults(func=cmd_nctorus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (PolytopeInputError, SchemeError, WordSyntaxError, IndexOutOfRange, IrrationalAngle) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID
    except PolytopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return STRUCTURAL
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
