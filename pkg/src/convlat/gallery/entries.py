"""Exact counterexamples and their positive counterparts.

Every entry fixes a lattice, an identity and an assignment built from
rational data, states the verdict the construction must produce, and lists
side facts about the construction that are asserted exactly before the
verdict counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Tuple

from ..geom import polytope as gp
from ..geom.rational import Point, parse_point, scale, sub
from ..lattices.conv import PointedPolytopeLattice, PolytopeLattice
from ..lattices.relconv import GroundSet, RelConvLattice
from ..terms.ast import Identity
from ..terms.builders import (
    build_Dn,
    build_Dn_op,
    build_radon_identity,
    build_wrapped_Dn,
    build_wrapped_Dn_op,
)
from ..terms.check import FAILS, HOLDS, CheckReport, LatticeHandle, check

F = Fraction


class GalleryError(ValueError):
    pass


@dataclass
class Counterpart:
    label: str
    lattice: LatticeHandle
    identity: Identity
    assignment: Dict[str, Any]
    expected: str = HOLDS


@dataclass
class GalleryEntry:
    name: str
    params: Dict[str, int]
    lattice: LatticeHandle
    identity: Identity
    assignment: Dict[str, Any]
    expected: str
    construction: str
    facts: List[Tuple[str, bool]] = field(default_factory=list)
    counterparts: List[Counterpart] = field(default_factory=list)

    @property
    def key(self) -> str:
        if not self.params:
            return self.name
        return self.name + "[" + ",".join(f"{k}={v}" for k, v in self.params.items()) + "]"

    def run(self) -> dict:
        rep = check(self.identity, self.lattice, self.assignment)
        wit_ok = None
        if rep.verdict == FAILS:
            wit_ok = witness_rechecks(self.lattice, rep)
        parts = []
        for c in self.counterparts:
            r = check(c.identity, c.lattice, c.assignment)
            parts.append({"label": c.label, "identity": c.identity.name, "lattice": c.lattice.selector,
                          "expected": c.expected, "observed": r.verdict, "pass": r.verdict == c.expected})
        facts = [{"fact": label, "holds": ok} for label, ok in self.facts]
        passed = (
            rep.verdict == self.expected
            and (wit_ok is not False)
            and all(f["holds"] for f in facts)
            and all(p["pass"] for p in parts)
        )
        return {
            "entry": self.key,
            "identity": self.identity.name,
            "lattice": self.lattice.selector,
            "construction": self.construction,
            "expected": self.expected,
            "observed": rep.verdict,
            "witness": rep.witness,
            "witness_side": rep.witness_side,
            "witness_rechecked": wit_ok,
            "assignment": {k: self.lattice.describe(v) for k, v in self.assignment.items()},
            "facts": facts,
            "counterparts": parts,
            "pass": passed,
        }

    def report(self) -> CheckReport:
        return check(self.identity, self.lattice, self.assignment)


def witness_rechecks(lattice: LatticeHandle, rep: CheckReport) -> bool:
    """The witness lies in the larger side and not in the other one."""
    if rep.witness is None:
        return False
    big, small = rep.values["lhs"], rep.values["rhs"]
    if rep.witness_side == "rhs":
        big, small = small, big
    if isinstance(lattice, RelConvLattice):
        w = parse_point(rep.witness, lattice.dim)
        i = lattice.ground.index.get(w)
        return i is not None and i in big and i not in small
    w = parse_point(rep.witness)
    return gp.contains(big, w) and not gp.contains(small, w)


# -- shared geometry ---------------------------------------------------------

def _unit(n: int, i: int) -> Point:
    return tuple(F(1) if k == i else F(0) for k in range(n))


def _zero(n: int) -> Point:
    return (F(0),) * n


def standard_simplex(n: int) -> List[Point]:
    return [_zero(n)] + [_unit(n, i) for i in range(n)]


def centroid(points: List[Point]) -> Point:
    k = len(points)
    return tuple(sum(p[i] for p in points) / k for i in range(len(points[0])))


def reflect(points: List[Point], p: Point) -> List[Point]:
    return [sub(scale(2, p), v) for v in points]


def lift(p: Point) -> Point:
    """Embed into the hyperplane whose last coordinate is 1."""
    return tuple(p) + (F(1),)


def _require(n: int, lo: int, hi: int, what: str) -> None:
    if not lo <= n <= hi:
        raise GalleryError(f"{what}: n = {n} outside the supported range {lo}..{hi}")


def _last_coord_profile(P: gp.Polytope) -> List[Point]:
    """Vertices on the hyperplane last coordinate = 1."""
    return [v for v in P.vertices if v[-1] == 1]


# -- entries -----------------------------------------------------------------

def dn_fail_conv(n: int) -> GalleryEntry:
    """Singletons at simplex vertices against an interior point."""
    _require(n, 1, 3, "dn_fail_conv")
    L = PolytopeLattice(n)
    qs = standard_simplex(n)
    p = centroid(qs)
    asg = {"x": L.element([p])}
    for i, q in enumerate(qs, 1):
        asg[f"y{i}"] = L.element([q])
    ident = build_Dn(n)
    facts = [("p is interior to the simplex", all(c > 0 for c in p) and sum(p) < 1)]
    extra = dict(asg, **{f"y{n + 2}": L.element([sub(scale(2, p), qs[0])])})
    return GalleryEntry(
        "dn_fail_conv", {"n": n}, L, ident, asg, FAILS,
        "singletons at the vertices of a rational n-simplex, x the centroid",
        facts,
        [Counterpart(f"D_{n + 1} holds on the same sets plus one more point", L, build_Dn(n + 1), extra)],
    )


def _wrapped_dn_assignment(n: int, enlarge: bool = True):
    L = PointedPolytopeLattice(n)
    base = standard_simplex(n - 1)
    qs = [lift(v) for v in base]
    p = lift(centroid(base))
    q2_half = scale(F(1, 2), qs[1])
    asg = {"x": L.element([p])}
    for i, q in enumerate(qs, 1):
        asg[f"y{i}"] = L.element([q])
    if enlarge:
        asg["y1"] = L.element([qs[0], q2_half])
    z = L.element([sub(scale(2, q2_half), p)])
    asg["z"] = z
    return L, qs, p, q2_half, asg


def wrapped_dn_fail_pointed(n: int) -> GalleryEntry:
    """Cone over a lower-dimensional simplex example, y1 enlarged by q2/2."""
    _require(n, 2, 3, "wrapped_dn_fail_pointed")
    L, qs, p, q, asg = _wrapped_dn_assignment(n)
    ident = build_wrapped_Dn(n - 1)
    inner = build_Dn(n - 1)
    lhs = _eval(inner.lhs, L, asg)
    rhs = _eval(inner.rhs, L, asg)
    w = L.meet(asg["y1"], asg["y2"])
    facts = [
        ("left side of D_{n-1} meets the hyperplane only in p", _last_coord_profile(lhs) == [p]),
        ("right side of D_{n-1} misses the hyperplane", all(v[-1] < 1 for v in rhs.vertices)),
        ("y1 & y2 is the segment from 0 to q2/2", w == L.element([q])),
        ("z is the segment from 0 to 2q - p", asg["z"] == L.element([sub(scale(2, q), p)])),
    ]
    _, _, _, _, plain = _wrapped_dn_assignment(n, enlarge=False)
    dn_args = {k: asg[k] for k in inner.free_vars}
    dn_args[f"y{n + 1}"] = asg["z"]
    return GalleryEntry(
        "wrapped_dn_fail_pointed", {"n": n}, L, ident, asg, FAILS,
        "segments from 0 to a lifted simplex and its centroid, y1 widened by q2/2, z = c.h.(0, 2q - p)",
        facts,
        [
            Counterpart("unenlarged y1 makes y1 & y2 = {0}", L, ident, plain),
            Counterpart(f"D_{n} holds in the pointed lattice", L, build_Dn(n), dn_args),
        ],
    )


def _dnop_configuration(n: int):
    xs = standard_simplex(n)
    p = (F(2),) * n
    xr = reflect(xs, p)
    # y_i is the facet of x' opposite its i-th vertex
    faces = [[v for j, v in enumerate(xr) if j != i] for i in range(n + 1)]
    return xs, p, xr, faces


def dnop_fail_conv(n: int) -> GalleryEntry:
    """Simplex x, and the facets of its reflection through an outside point."""
    _require(n, 1, 3, "dnop_fail_conv")
    L = PolytopeLattice(n)
    xs, p, xr, faces = _dnop_configuration(n)
    asg = {"x": L.element(xs)}
    for i, f in enumerate(faces, 1):
        asg[f"y{i}"] = L.element(f)
    ys = [asg[f"y{i}"] for i in range(1, n + 2)]
    facts = [
        ("p lies outside x", not gp.contains(asg["x"], p)),
        ("the meet of all y_i is empty", gp.meet_all(ys, n).is_empty),
        ("each meet of all but one y_i is a vertex of x'", all(
            gp.meet_all([y for j, y in enumerate(ys) if j != i], n) == L.element([xr[i]])
            for i in range(n + 1))),
    ]
    extra = dict(asg, **{f"y{n + 2}": L.element([p])})
    return GalleryEntry(
        "dnop_fail_conv", {"n": n}, L, build_Dn_op(n), asg, FAILS,
        "standard simplex x, p = (2,...,2), y_i the facets of 2p - x",
        facts,
        [Counterpart(f"D_{n + 1}^op holds on the same sets plus {{p}}", L, build_Dn_op(n + 1), extra)],
    )


def wrapped_dnop_fail_pointed(n: int) -> GalleryEntry:
    """Cone over the dual example one dimension down, y1 widened by q0/2."""
    _require(n, 2, 3, "wrapped_dnop_fail_pointed")
    L = PointedPolytopeLattice(n)
    xs0, p0, xr0, faces0 = _dnop_configuration(n - 1)
    p0 = lift(p0)
    q0 = lift(xr0[0])  # the vertex of x0' opposite y_10
    q = scale(F(1, 2), q0)
    asg = {"x": L.element([lift(v) for v in xs0])}
    for i, f in enumerate(faces0, 1):
        asg[f"y{i}"] = L.element([lift(v) for v in f])
    asg["y1"] = L.element([lift(v) for v in faces0[0]] + [q])
    asg["zp"] = L.element([p0])
    asg["z"] = L.element([sub(scale(2, q), p0)])
    ident = build_wrapped_Dn_op(n - 1)
    inner = build_Dn_op(n - 1)
    lhs = _eval(inner.lhs, L, asg)
    rhs = _eval(inner.rhs, L, asg)
    ys = [asg[f"y{i}"] for i in range(1, n + 1)]
    facts = [
        ("meet of all y_i is the segment from 0 to q0/2", gp.meet_all(ys, n) == L.element([q])),
        ("right side of D_{n-1}^op contains p0", gp.contains(rhs, p0)),
        ("left side of D_{n-1}^op misses p0", not gp.contains(lhs, p0)),
        ("p0 and q0/2 lie on different lines through 0", not _collinear_with_origin(p0, q)),
    ]
    dn_args = {k: asg[k] for k in inner.free_vars}
    dn_args[f"y{n + 1}"] = asg["z"]
    return GalleryEntry(
        "wrapped_dnop_fail_pointed", {"n": n}, L, ident, asg, FAILS,
        "cones over the dual simplex example, y1 widened by q0/2, z' = c.h.(0, p0), z = c.h.(0, 2q - p0)",
        facts,
        [Counterpart(f"D_{n}^op holds in the pointed lattice", L, build_Dn_op(n), dn_args)],
    )


def radon_fail(n_plus_1: int) -> GalleryEntry:
    """Simplex x and singletons at the vertices of its reflection."""
    _require(n_plus_1, 1, 3, "radon_fail")
    d = n_plus_1
    n = d - 1
    L = PolytopeLattice(d)
    xs, p, xr, _ = _dnop_configuration(d)
    asg = {"x": L.element(xs)}
    for i, v in enumerate(xr, 1):
        asg[f"y{i}"] = L.element([v])
    ident = build_radon_identity(n)
    ys = [asg[f"y{i}"] for i in range(1, d + 2)]
    empty_parts = all(
        L.meet(gp.join_all([ys[i] for i in I1], d), gp.join_all([ys[i] for i in range(d + 1) if i not in I1], d)).is_empty
        for r in range(1, d + 1) for I1 in combinations(range(d + 1), r)
    )
    facts = [("every split joinand is empty", empty_parts)]
    P = PointedPolytopeLattice(d)
    pointed = {k: P.element(list(v.vertices)) for k, v in asg.items()}
    segs = dict(asg)
    for i, v in enumerate(xr, 1):
        segs[f"y{i}"] = L.element([v, p])
    return GalleryEntry(
        "radon_fail", {"n": n_plus_1}, L, ident, asg, FAILS,
        "standard simplex x, p = (2,...,2), y_i singletons at the vertices of 2p - x",
        facts,
        [
            Counterpart("segments to the common point p restore the identity", L, ident, segs),
            Counterpart("the pointed lattice satisfies the identity", P, ident, pointed),
        ],
    )


def relconv_d1op_fail() -> GalleryEntry:
    """S = {0, +-e1, +-e2}; antipodes put 0 in x | y_i but not in x."""
    S = [(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)]
    L = RelConvLattice.from_points(S, source="gallery:cross")
    asg = {"y1": L.element([2]), "y2": L.element([1]), "x": L.element([3, 4])}
    facts = [
        ("x | y_i contains 0 for each i", all(0 in L.join(asg["x"], asg[y]) for y in ("y1", "y2"))),
        ("y1 & y2 is empty", not L.meet(asg["y1"], asg["y2"])),
        ("x does not contain 0", 0 not in asg["x"]),
    ]
    wrapped = dict(asg, zp=L.join(asg["x"], asg["y1"]), z=asg["y2"])
    return GalleryEntry(
        "relconv_d1op_fail", {}, L, build_Dn_op(1), asg, FAILS,
        "S = {0, +-e1, +-e2}, y1 = {e2}, y2 = {e1}, x = {-e1, -e2}",
        facts,
        [Counterpart("the wrapped D_1^op still holds on S", L, build_wrapped_Dn_op(1), wrapped)],
    )


def pythagorean_half_circle(k: int) -> List[Point]:
    """k rational unit vectors in the open upper half plane, by increasing angle.

    t = tan(theta/2) rational gives ((1-t^2)/(1+t^2), 2t/(1+t^2)) on the
    circle; the t are rounded tangents of evenly spread angles.
    """
    pts = []
    for j in range(k):
        theta = math.pi * (j + F(1, 2)) / k
        t = F(math.tan(float(theta) / 2)).limit_denominator(12)
        pts.append(((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)))
    return pts


def _cross(a: Point, b: Point):
    return a[0] * b[1] - a[1] * b[0]


def _collinear_with_origin(a: Point, b: Point) -> bool:
    # all 2x2 minors vanish
    return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a)))


def relconv_wrapped_fail(n: int) -> GalleryEntry:
    """2n+6 rational circle points with antipodes, 0, and r = 3 q_{n+2}."""
    _require(n, 1, 2, "relconv_wrapped_fail")
    half = pythagorean_half_circle(n + 3)
    qs = half + [scale(-1, v) for v in half]  # q_1..q_{2n+6}
    m = len(qs)
    r = scale(3, qs[n + 1])
    S = qs + [(F(0), F(0)), r]
    zero, r_ix = m, m + 1
    G = GroundSet(S)
    p_ix = n + 2  # q_{n+3}
    L = RelConvLattice(G, base_point=p_ix, source="gallery:circle")

    def Q(*subs):
        return [s - 1 for s in subs]

    asg = {}
    for i in range(1, n + 2):
        asg[f"y{i}"] = L.element(Q(*[j for j in range(1, n + 4) if j != i]))
    asg["x"] = L.element(Q(*range(n + 3, 2 * n + 5)))
    asg["zp"] = L.element([p_ix, zero])
    asg["z"] = L.element([p_ix, r_ix])
    ys = [asg[f"y{i}"] for i in range(1, n + 2)]
    meet_y = frozenset.intersection(*ys)
    inner = build_Dn_op(n)
    lhs = _eval(inner.lhs, L, asg)
    rhs = _eval(inner.rhs, L, asg)
    facts = [
        ("points lie on the unit circle", all(v[0] ** 2 + v[1] ** 2 == 1 for v in qs)),
        ("q_{i+n+3} is antipodal to q_i", all(qs[i + n + 3] == scale(-1, qs[i]) for i in range(n + 3))),
        ("successive points turn counterclockwise", all(_cross(qs[i], qs[(i + 1) % m]) > 0 for i in range(m))),
        ("q_{n+2} lies on the segment from 0 to r", bool(G.closure_mask((1 << zero) | (1 << r_ix)) >> (n + 1) & 1)),
        ("r lies at distance >= 2 from 0", r[0] ** 2 + r[1] ** 2 >= 4),
        ("the given sets are exactly the intended relatively convex sets", all(
            asg[k] == frozenset(v) for k, v in _intended_sets(n, p_ix, zero, r_ix).items())),
        ("meet of all y_i is {q_{n+2}, q_{n+3}}", meet_y == frozenset(Q(n + 2, n + 3))),
        ("right side of D_n^op contains 0", zero in rhs),
        ("left side of D_n^op misses 0", zero not in lhs),
    ]
    dn_args = {"x": asg["x"]}
    for i in range(1, n + 2):
        dn_args[f"y{i}"] = asg[f"y{i}"]
    if n == 1:
        dn_args["y3"] = asg["z"]
    return GalleryEntry(
        "relconv_wrapped_fail", {"n": n}, L, build_wrapped_Dn_op(n), asg, FAILS,
        "rational circle points with antipodes, centre 0 and r = 3 q_{n+2}, above p = q_{n+3}",
        facts,
        [Counterpart("D_2 holds in the pointed relative lattice of a planar set", L, build_Dn(2), dn_args)],
    )


def _intended_sets(n: int, p_ix: int, zero: int, r_ix: int) -> Dict[str, set]:
    out = {f"y{i}": {j - 1 for j in range(1, n + 4) if j != i} for i in range(1, n + 2)}
    out["x"] = {j - 1 for j in range(n + 3, 2 * n + 5)}
    out["zp"] = {p_ix, zero}
    out["z"] = {p_ix, r_ix}
    return out


def _eval(term, L, asg):
    from ..terms.check import evaluate

    return evaluate(term, L, asg)


# name -> (builder, parameter values run by the suite)
REGISTRY: Dict[str, Tuple[Callable[..., GalleryEntry], Tuple[Optional[int], ...]]] = {
    "dn_fail_conv": (dn_fail_conv, (1, 2, 3)),
    "wrapped_dn_fail_pointed": (wrapped_dn_fail_pointed, (2, 3)),
    "dnop_fail_conv": (dnop_fail_conv, (1, 2, 3)),
    "wrapped_dnop_fail_pointed": (wrapped_dnop_fail_pointed, (2, 3)),
    "radon_fail": (radon_fail, (1, 2, 3)),
    "relconv_d1op_fail": (relconv_d1op_fail, (None,)),
    "relconv_wrapped_fail": (relconv_wrapped_fail, (1, 2)),
}


def build_entry(name: str, n: Optional[int] = None) -> GalleryEntry:
    if name not in REGISTRY:
        raise GalleryError(f"unknown gallery entry {name!r}; known: {', '.join(sorted(REGISTRY))}")
    fn, defaults = REGISTRY[name]
    if defaults == (None,):
        if n is not None:
            raise GalleryError(f"{name} takes no parameter")
        return fn()
    return fn(defaults[0] if n is None else n)
