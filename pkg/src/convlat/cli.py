"""Command-line front end; every command prints one JSON report on stdout.

Exit status: 0 when the observed outcome matches ``--expect`` (or none was
given), 1 on a mismatch, 2 on usage or data errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Dict, List, Optional

from . import __version__
from .geom import polytope as gp
from .geom.io import DataError, load_ground_set, load_json, load_polytope, load_star_rays, polytope_to_json
from .geom.rational import RationalParseError
from .terms.ast import Identity, TermSyntaxError, parse_identity, print_identity
from .terms.builders import builtin_identity
from .terms.check import FAILS, HOLDS, LatticeMismatch, SamplerConfig, check, falsify

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


_BUILTIN_RE = re.compile(r"^[A-Za-z-]+(:\d+)+$")


def resolve_identity(text: str) -> Identity:
    """A builtin name such as ``D:2``, ``@file`` holding DSL, or inline DSL."""
    if text.startswith("@") or (os.path.isfile(text) and not _BUILTIN_RE.match(text)):
        path = text[1:] if text.startswith("@") else text
        try:
            with open(path, encoding="utf-8") as fh:
                src = fh.read().strip()
        except OSError as exc:
            raise DataError(f"{path}: {exc.strerror}") from None
        return parse_identity(src)
    if _BUILTIN_RE.match(text):
        try:
            return builtin_identity(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return parse_identity(text)


def _lattice(selector: str):
    from .lattices.selector import lattice_from_selector

    return lattice_from_selector(selector)


def _timestamp(t0: float) -> dict:
    return {"utc": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "elapsed_s": round(time.perf_counter() - t0, 6)}


def _expectation(expect: Optional[str], holds: bool) -> Optional[bool]:
    if expect is None:
        return None
    return holds == (expect == "holds")


def _finish(report: dict, args, status: int) -> int:
    text = json.dumps(report, indent=2, sort_keys=False)
    print(text)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return status


def _status(match: Optional[bool]) -> int:
    return EXIT_MISMATCH if match is False else EXIT_OK


# -- check -------------------------------------------------------------------

def _load_assignment(path: str, lattice_sel: Optional[str]):
    obj = load_json(path)
    if not isinstance(obj, dict):
        raise DataError(f"{path}: assignment must be a JSON object")
    if "vars" in obj:
        file_sel = obj.get("lattice")
        raw = obj["vars"]
    else:
        file_sel, raw = None, obj
    if lattice_sel and file_sel and lattice_sel != file_sel:
        raise UsageError(f"--lattice {lattice_sel} disagrees with the assignment file's {file_sel}")
    sel = lattice_sel or file_sel
    if not sel:
        raise UsageError("no lattice given: use --lattice or a \"lattice\" field in the assignment file")
    L = _lattice(sel)
    if not isinstance(raw, dict):
        raise DataError(f"{path}: \"vars\" must be an object")
    asg = {}
    for name, lit in raw.items():
        try:
            asg[name] = L.parse_element(lit)
        except (DataError, RationalParseError, LatticeMismatch) as exc:
            raise DataError(f"{path}: variable {name!r}: {exc}") from None
    return L, asg


def _gallery_assignment(name: str, n: Optional[int], lattice_sel: Optional[str], identity: Identity):
    from .gallery.entries import REGISTRY, GalleryError, build_entry

    if name not in REGISTRY:
        raise UsageError(f"unknown gallery entry {name!r}")
    candidates = [n] if n is not None else list(REGISTRY[name][1])
    for k in candidates:
        try:
            entry = build_entry(name, k)
        except GalleryError as exc:
            raise UsageError(str(exc)) from None
        if lattice_sel and entry.lattice.selector != lattice_sel:
            continue
        if not set(identity.free_vars) <= set(entry.assignment):
            continue
        return entry.lattice, entry.assignment
    raise UsageError(f"no {name} instance matches lattice {lattice_sel} and identity {identity.name or 'given'}")


def cmd_check(args) -> int:
    t0 = time.perf_counter()
    ident = resolve_identity(args.identity)
    if bool(args.assignment) == bool(args.gallery):
        raise UsageError("give exactly one of --assignment or --gallery")
    if args.assignment:
        L, asg = _load_assignment(args.assignment, args.lattice)
    else:
        L, asg = _gallery_assignment(args.gallery, args.n, args.lattice, ident)
    try:
        rep = check(ident, L, asg)
    except KeyError as exc:
        raise DataError(str(exc.args[0])) from None
    out = rep.to_json(L)
    out["expected"] = args.expect
    match = _expectation(args.expect, rep.holds)
    out["match"] = match
    out["timestamp"] = _timestamp(t0)
    return _finish(out, args, _status(match))


# -- falsify -----------------------------------------------------------------

def cmd_falsify(args) -> int:
    t0 = time.perf_counter()
    if args.seed is None:
        raise UsageError("falsify needs --seed")
    ident = resolve_identity(args.identity)
    L = _lattice(args.lattice)
    cfg = SamplerConfig(
        dim=L.dim,
        min_points=args.min_points,
        max_points=args.max_points,
        denominator=args.denominator,
        coord_bound=args.coord_bound,
        include_origin=args.include_origin,
    )
    try:
        res = falsify(ident, L, cfg, args.trials, args.seed, workers=args.workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = {
        "command": "falsify",
        "identity": print_identity(ident),
        "identity_name": ident.name,
        "lattice": L.selector,
        "seed": args.seed,
        "trials": args.trials,
        "trials_run": res.trials_run,
        "sampler": {"min_points": cfg.min_points, "max_points": cfg.max_points,
                    "denominator": cfg.denominator, "coord_bound": cfg.coord_bound,
                    "include_origin": cfg.include_origin},
        "found": res.found,
        "automatic_breaches": res.automatic_breaches,
        "failure": res.failure.to_json(L) if res.found else None,
    }
    match = _expectation(args.expect, not res.found)
    out["expected"] = args.expect
    out["match"] = match
    out["timestamp"] = _timestamp(t0)
    return _finish(out, args, _status(match))


# -- gallery -----------------------------------------------------------------

def cmd_gallery(args) -> int:
    from .gallery import GalleryError, run_all, run_entry

    t0 = time.perf_counter()
    if args.name == "all":
        out = run_all(args.filter, workers=args.workers)
        ok = out["pass"]
    else:
        try:
            out = run_entry(args.name, args.n)
        except GalleryError as exc:
            raise UsageError(str(exc)) from None
        ok = out["pass"]
    out["timestamp"] = _timestamp(t0)
    return _finish(out, args, EXIT_OK if ok else EXIT_MISMATCH)


# -- snowflake ---------------------------------------------------------------

def cmd_snowflake(args) -> int:
    from .star import snowflake as sf
    from .star.stars import hexagon_config, snow_to_star, star_join, star_meet

    t0 = time.perf_counter()
    if args.sub == "op":
        res = sf.eval_snow_expr(args.expression)
        out = {"expression": args.expression, "result": str(res)}
        match = None
    elif args.sub == "generate":
        gen = sf.snow_generate(args.bound)
        out = {"bound": args.bound, "elements": len(gen.elements), "components": gen.components,
               "truncated": gen.truncated, "all_positive_integers": all(
                   v is sf.INF or (v.denominator == 1 and v >= 1) for e in gen.elements for v in e.a)}
        if args.list:
            out["listing"] = [str(e) for e in gen.elements]
        match = None
    elif args.sub == "chain":
        chain = sf.descending_chain(args.steps)
        out = {"steps": args.steps, "chain": [str(e) for e in chain],
               "strictly_descending": all(b.leq(a) and a != b for a, b in zip(chain, chain[1:]))}
        match = None
    else:  # model
        vals = [Fraction(k) for k in range(1, args.max + 1)] + [sf.INF]
        elems = sf.all_snow_elements(vals)
        cfg = hexagon_config()
        mism = 0
        for u in elems:
            su = snow_to_star(cfg, u)
            for v in elems:
                sv = snow_to_star(cfg, v)
                if star_join(su, sv).a != snow_to_star(cfg, sf.snow_join(u, v)).a:
                    mism += 1
                if star_meet(su, sv).a != snow_to_star(cfg, sf.snow_meet(u, v)).a:
                    mism += 1
        out = {"components": [sf.format_ext(v) for v in vals], "elements": len(elems),
               "pairs": len(elems) ** 2, "mismatches": mism}
        match = mism == 0
    out["match"] = match
    out["timestamp"] = _timestamp(t0)
    return _finish(out, args, _status(match))


# -- star --------------------------------------------------------------------

def _parse_values(text: str) -> List[str]:
    m = re.match(r"^\s*\[(.*)\]\s*$", text)
    if not m:
        raise DataError(f"expected a bracketed list like [1,2,inf], got {text!r}")
    return [t.strip() for t in m.group(1).split(",") if t.strip()]


def cmd_star(args) -> int:
    from .star.experiments import ascending_chain_experiment, octagon_exploration
    from .star.stars import (
        StarConfig,
        circuit_conditions_hold,
        describe_star,
        geometric_closure,
        star_join,
        star_meet,
    )

    t0 = time.perf_counter()
    if args.sub == "chain":
        out = ascending_chain_experiment(args.steps).to_json()
    elif args.sub == "octagon":
        out = octagon_exploration(args.max_elements).to_json()
    else:
        dim, rays = load_star_rays(args.config)
        cfg = StarConfig(rays)
        a = cfg.element(_parse_values(args.values))
        if args.sub == "closure":
            out = describe_star(a)
            out["circuits"] = len(cfg.circuits)
            out["flagged_circuits"] = len(cfg.flagged)
            out["circuit_conditions"] = circuit_conditions_hold(a)
            out["geometric_oracle_agrees"] = geometric_closure(cfg, a.a) == a.a
        else:
            b = cfg.element(_parse_values(args.other))
            r = star_join(a, b) if args.sub == "join" else star_meet(a, b)
            out = {"left": str(a), "right": str(b), "result": str(r), "endpoints": describe_star(r)["endpoints"]}
    out["timestamp"] = _timestamp(t0)
    return _finish(out, args, EXIT_OK)


# -- relconv -----------------------------------------------------------------

def cmd_relconv(args) -> int:
    from .geom.rational import format_point
    from .lattices.relconv import GroundSet, enumerate_closed_sets, rel_closure

    t0 = time.perf_counter()
    dim, pts = load_ground_set(args.ground)
    G = GroundSet(pts, dim)
    if args.sub == "enumerate":
        sets = enumerate_closed_sets(G)
        out = {"points": len(G), "closed_sets": len(sets)}
        if args.list:
            out["listing"] = [sorted(s) for s in sets]
    else:
        for i in args.indices:
            if not 0 <= i < len(G):
                raise DataError(f"index {i} outside the ground set of {len(G)} points")
        c = rel_closure(G, args.indices)
        out = {"input": sorted(set(args.indices)), "closure": sorted(c),
               "points": [format_point(G.points[i]) for i in sorted(c)]}
    out["timestamp"] = _timestamp(t0)
    return _finish(out, args, EXIT_OK)


# -- abstract ----------------------------------------------------------------

def cmd_abstract(args) -> int:
    from . import abstract as ab

    t0 = time.perf_counter()
    match = None
    if args.sub == "equiv":
        L = ab.partition_lattice(args.size)
        out = {"size": args.size, "elements": len(L)}
        if args.verify_iso:
            iso = ab.verify_isomorphism(args.size)
            out["isomorphic"] = iso["isomorphic"]
            out["details"] = iso
            match = iso["isomorphic"]
        if args.mk:
            m = ab.find_Mk(L, args.mk)
            out["M_k"] = None if m is None else {
                "bottom": L.labels[m["bottom"]], "top": L.labels[m["top"]], "atoms": [L.labels[a] for a in m["atoms"]]}
    elif args.sub in ("sd", "mk"):
        L = ab.lattice_from_json(load_json(args.lattice_file))
        if args.sub == "mk":
            m = ab.find_Mk(L, args.k)
            out = {"k": args.k, "found": m is not None,
                   "embedding": None if m is None else {"bottom": L.labels[m["bottom"]], "top": L.labels[m["top"]],
                                                        "atoms": [L.labels[a] for a in m["atoms"]]}}
        else:
            j, jw = ab.is_njsd(L, args.n)
            mm, mw = ab.is_nmsd(L, args.n)
            fmt = (lambda w: None if w is None else {"x": L.labels[w[0]], "ys": [L.labels[y] for y in w[1]]})
            out = {"n": args.n, "elements": len(L), "njsd": j, "njsd_witness": fmt(jw),
                   "nmsd": mm, "nmsd_witness": fmt(mw)}
    elif args.sub == "lemma24":
        C = ab.load_closure_system(args.system)
        rep = ab.check_lemma24(C, args.n)
        out = rep.to_json()
        match = rep.agrees if rep.status == "checked" else None
    else:  # lemma24-random
        if args.seed is None:
            raise UsageError("lemma24-random needs --seed")
        counts = {"checked": 0, "skipped": 0, "discrepancies": 0}
        bad = []
        for s in range(args.systems):
            C = ab.random_closure_system(f"{args.seed}:{s}", args.max_points)
            for n in range(1, args.max_n + 1):
                rep = ab.check_lemma24(C, n)
                counts[rep.status] += 1
                if rep.status == "checked" and not rep.agrees:
                    counts["discrepancies"] += 1
                    bad.append({"system": C.to_json(), "n": n})
        out = {"systems": args.systems, "seed": args.seed, **counts, "violations": bad}
        match = counts["discrepancies"] == 0
    out["match"] = match
    out["timestamp"] = _timestamp(t0)
    return _finish(out, args, _status(match))


# -- dual --------------------------------------------------------------------

def cmd_dual(args) -> int:
    t0 = time.perf_counter()
    P = load_polytope(args.polytope)
    try:
        D = gp.polar_dual(P)
    except gp.GeometryError as exc:
        raise DataError(str(exc)) from None
    out = {"input": polytope_to_json(P), "dual": polytope_to_json(D),
           "involution": gp.polar_dual(D) == P}
    out["timestamp"] = _timestamp(t0)
    return _finish(out, args, EXIT_OK)


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", default=None, help="seed for sampling commands")
    common.add_argument("--out", default=None, help="also write the JSON report here")
    common.add_argument("--expect", choices=["holds", "fails"], default=None)

    p = argparse.ArgumentParser(prog="convlat", description="Exact lattices of convex sets.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="evaluate an identity on one assignment")
    c.add_argument("--lattice")
    c.add_argument("--identity", required=True)
    c.add_argument("--assignment")
    c.add_argument("--gallery")
    c.add_argument("--n", type=int)
    c.set_defaults(func=cmd_check)

    f = sub.add_parser("falsify", parents=[common], help="seeded random search for a failure")
    f.add_argument("--lattice", required=True)
    f.add_argument("--identity", required=True)
    f.add_argument("--trials", type=int, default=500)
    f.add_argument("--min-points", type=int, default=1)
    f.add_argument("--max-points", type=int, default=3)
    f.add_argument("--denominator", type=int, default=3)
    f.add_argument("--coord-bound", type=int, default=2)
    f.add_argument("--include-origin", action="store_true")
    f.add_argument("--workers", type=int, default=1)
    f.set_defaults(func=cmd_falsify)

    g = sub.add_parser("gallery", parents=[common], help="run counterexample constructions")
    g.add_argument("name", help="entry name, or 'all'")
    g.add_argument("--n", type=int)
    g.add_argument("--filter")
    g.add_argument("--workers", type=int, default=1)
    g.set_defaults(func=cmd_gallery)

    s = sub.add_parser("snowflake", parents=[common], help="snowflake lattice arithmetic")
    ss = s.add_subparsers(dest="sub", required=True)
    so = ss.add_parser("op", parents=[common])
    so.add_argument("expression")
    sg = ss.add_parser("generate", parents=[common])
    sg.add_argument("--bound", type=int, default=6)
    sg.add_argument("--list", action="store_true")
    sc = ss.add_parser("chain", parents=[common])
    sc.add_argument("--steps", type=int, default=9)
    sm = ss.add_parser("model", parents=[common])
    sm.add_argument("--max", type=int, default=5)
    s.set_defaults(func=cmd_snowflake)

    t = sub.add_parser("star", parents=[common], help="relatively convex star sets")
    ts = t.add_subparsers(dest="sub", required=True)
    tc = ts.add_parser("chain", parents=[common])
    tc.add_argument("--steps", type=int, default=10)
    to = ts.add_parser("octagon", parents=[common])
    to.add_argument("--max-elements", type=int, default=200)
    for name in ("closure", "join", "meet"):
        tp = ts.add_parser(name, parents=[common])
        tp.add_argument("config")
        tp.add_argument("values", help="inverse lengths, e.g. [1,2,inf]")
        if name != "closure":
            tp.add_argument("other")
    t.set_defaults(func=cmd_star)

    r = sub.add_parser("relconv", parents=[common], help="relatively convex subsets of a finite set")
    rs = r.add_subparsers(dest="sub", required=True)
    re_ = rs.add_parser("enumerate", parents=[common])
    re_.add_argument("ground")
    re_.add_argument("--list", action="store_true")
    rc = rs.add_parser("closure", parents=[common])
    rc.add_argument("ground")
    rc.add_argument("indices", type=int, nargs="*")
    r.set_defaults(func=cmd_relconv)

    a = sub.add_parser("abstract", parents=[common], help="finite lattices and closure systems")
    as_ = a.add_subparsers(dest="sub", required=True)
    ae = as_.add_parser("equiv", parents=[common])
    ae.add_argument("--size", type=int, required=True)
    ae.add_argument("--verify-iso", action="store_true")
    ae.add_argument("--mk", type=int, default=0)
    am = as_.add_parser("mk", parents=[common])
    am.add_argument("lattice_file")
    am.add_argument("--k", type=int, default=3)
    asd = as_.add_parser("sd", parents=[common])
    asd.add_argument("lattice_file")
    asd.add_argument("--n", type=int, default=1)
    al = as_.add_parser("lemma24", parents=[common])
    al.add_argument("system")
    al.add_argument("--n", type=int, default=1)
    ar = as_.add_parser("lemma24-random", parents=[common])
    ar.add_argument("--systems", type=int, default=200)
    ar.add_argument("--max-points", type=int, default=6)
    ar.add_argument("--max-n", type=int, default=3)
    a.set_defaults(func=cmd_abstract)

    d = sub.add_parser("dual", parents=[common], help="polar dual of a polytope file")
    d.add_argument("polytope")
    d.set_defaults(func=cmd_dual)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except TermSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (UsageError, DataError, RationalParseError, LatticeMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (gp.GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
