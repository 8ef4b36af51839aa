"""The twelve acceptance criteria, one test each.

Every test records a PASS or FAIL line that the terminal summary prints,
and also prints it directly for runs with ``-s``.
"""

import functools
import json
import random
import time
from fractions import Fraction as F
from itertools import combinations

import pytest

from convlat.abstract import (
    ClosureSystem,
    check_lemma24,
    from_ground_set,
    random_closure_system,
    verify_isomorphism,
)
from convlat.geom import (
    NotInHull,
    caratheodory_witness,
    common_point,
    cone_meets,
    contains,
    helly_verify,
    hull,
    polar_dual,
    radon_partition,
    visibility_cone,
)
from convlat.lattices import (
    GroundSet,
    PointedPolytopeLattice,
    PolytopeLattice,
    hull_lattice_R1_meet_check,
    jsd_premise_sampler,
    rel_closure,
)
from convlat.star import (
    S1,
    S2,
    S3,
    ascending_chain_experiment,
    descending_chain,
    hexagon_config,
    snow_generate,
    snow_join,
    snow_meet,
    snow_to_star,
    star_join,
    star_meet,
)
from convlat.star.snowflake import INF, all_snow_elements
from convlat.star.stars import circuit_conditions_hold, geometric_closure, star_leq
from convlat.terms import Join, Meet, Var, builtin_identity, parse_term, print_term
from convlat.terms.check import HOLDS, SamplerConfig, check_jsd, falsify

import conftest
import oracles
from conftest import run_cli, strip_timestamps

pytestmark = pytest.mark.slow


def criterion(n, title):
    def deco(fn):
        @functools.wraps(fn)
        def run(*a, **kw):
            t0 = time.perf_counter()
            status, detail = "FAIL", ""
            try:
                detail = fn(*a, **kw) or ""
                status = "PASS"
            except BaseException as exc:
                detail = f"{type(exc).__name__}: {exc}".splitlines()[0][:160]
                raise
            finally:
                line = f"criterion {n:>2} {status}  {title}  ({time.perf_counter() - t0:.1f}s) {detail}".rstrip()
                conftest.ACCEPTANCE[n] = line
                print(line)

        return run

    return deco


def _no_failures(ident_name, lattice, trials, seed):
    res = falsify(builtin_identity(ident_name), lattice, SamplerConfig(lattice.dim), trials, seed=seed)
    assert res.trials_run == trials
    assert not res.found, f"{ident_name} fails on {lattice.selector} at trial {res.failure.trial}"
    assert res.automatic_breaches == 0
    return f"{ident_name}@{lattice.selector}x{trials}"


@criterion(1, "positive identity suite")
def test_criterion_01_positive_identities():
    runs = []
    for n in (1, 2, 3):
        runs.append(_no_failures(f"D:{n + 1}", PolytopeLattice(n), 500, "acc1"))
    for n in (2, 3):
        runs.append(_no_failures(f"D:{n}", PointedPolytopeLattice(n), 500, "acc1"))
    for name in ("wrapped-D:2", "x27:2", "x26:2"):
        runs.append(_no_failures(name, PolytopeLattice(2), 200, "acc1"))
    return ", ".join(runs)


@criterion(2, "negative gallery suite")
def test_criterion_02_gallery():
    from convlat.gallery import run_all

    rep = run_all(None)
    for e in rep["entries"]:
        assert e["observed"] == "Fails" and e["witness"] is not None and e["witness_rechecked"], e["entry"]
    assert rep["passed"] == rep["total"] == 16 and rep["pass"]
    return f"{rep['passed']}/{rep['total']} entries fail with rechecked witnesses"


@criterion(3, "Radon identity and its dual")
def test_criterion_03_radon():
    runs = []
    for n in (1, 2):
        runs.append(_no_failures(f"radon:{n}", PolytopeLattice(n), 300, "acc3"))
        runs.append(_no_failures(f"radon:{n}", PointedPolytopeLattice(n + 1), 300, "acc3"))
    for n in (1, 2):
        runs.append(_no_failures(f"dual-radon:{n}", PointedPolytopeLattice(n + 1), 300, "acc3"))
    return ", ".join(runs)


def _carath_ok(w, pts, q, n, anchor=None):
    assert len(w.points) <= n + 1 and set(w.points) <= set(pts)
    assert all(c >= 0 for c in w.coefficients) and sum(w.coefficients) == 1
    assert w.evaluate() == tuple(q)
    if anchor is not None:
        assert anchor in w.points


@criterion(4, "geometry primitives vs oracles")
def test_criterion_04_geometry():
    rng = random.Random("acc4")
    counts = dict.fromkeys(("caratheodory", "anchored", "radon", "helly", "visibility", "membership"), 0)
    while counts["caratheodory"] < 1000 or counts["anchored"] < 1000:
        n = rng.choice((2, 3))
        pts = list({oracles.rand_point(rng, n, 3, 2) for _ in range(rng.randint(n + 1, n + 4))})
        lam = [F(rng.randint(0, 4)) for _ in pts]
        if not sum(lam):
            continue
        q = tuple(sum(l * p[i] for l, p in zip(lam, pts)) / sum(lam) for i in range(n))
        if counts["caratheodory"] < 1000:
            _carath_ok(caratheodory_witness(pts, q), pts, q, n)
            counts["caratheodory"] += 1
        if counts["anchored"] < 1000:
            anchor = rng.choice(pts)
            _carath_ok(caratheodory_witness(pts, q, anchor=anchor), pts, q, n, anchor)
            counts["anchored"] += 1
    while counts["radon"] < 1000:
        n = rng.choice((1, 2))
        pts = [oracles.rand_point(rng, n, 3, 3) for _ in range(n + 2)]
        if len(set(pts)) < len(pts):
            continue
        I1, I2, c = radon_partition(pts)
        assert sorted(I1 + I2) == list(range(n + 2))
        assert oracles.in_hull([pts[i] for i in I1], c) and oracles.in_hull([pts[i] for i in I2], c)
        valid = set()
        for r in range(1, n + 2):
            for A in combinations(range(n + 2), r):
                B = tuple(i for i in range(n + 2) if i not in A)
                if oracles.hulls_meet_small([pts[i] for i in A], [pts[i] for i in B]):
                    valid.add(frozenset((A, B)))
        assert frozenset((I1, I2)) in valid
        counts["radon"] += 1
    while counts["helly"] < 1000:
        n = rng.choice((1, 2))
        family = [hull([oracles.rand_point(rng, n, 2, 2) for _ in range(rng.randint(1, 3))], n)
                  for _ in range(n + 2)]
        assert helly_verify(family, n)
        premise = all(common_point(sub) is not None for sub in combinations(family, n + 1))
        if premise:
            c = common_point(family)
            assert c is not None and all(oracles.in_hull(P.vertices, c) for P in family)
        counts["helly"] += 1
    while counts["visibility"] < 1000:
        x = hull([oracles.rand_point(rng, 2, 2, 2) for _ in range(rng.randint(1, 3))], 2)
        y = hull([oracles.rand_point(rng, 2, 2, 2) for _ in range(rng.randint(1, 3))], 2)
        p = oracles.rand_point(rng, 2, 2, 2)
        assert cone_meets(visibility_cone(x, p), y) == oracles.in_hull(x.vertices + y.vertices, p)
        counts["visibility"] += 1
    while counts["membership"] < 1000:
        n = rng.choice((1, 2, 3))
        pts = [oracles.rand_point(rng, n, 2, 2) for _ in range(rng.randint(1, n + 3))]
        q = oracles.rand_point(rng, n, 2, 2)
        expect = oracles.in_hull(pts, q)
        assert contains(hull(pts, n), q) == expect
        if not expect:
            with pytest.raises(NotInHull):
                caratheodory_witness(pts, q)
        counts["membership"] += 1
    return ", ".join(f"{k}={v}" for k, v in counts.items())


@criterion(5, "join semidistributivity from constructed premises")
def test_criterion_05_jsd():
    for dim in (2, 3):
        L = PolytopeLattice(dim)
        for seed in range(500):
            x, y1, y2 = jsd_premise_sampler(dim, f"acc5:{seed}")
            assert L.join(x, y1) == L.join(x, y2)
            assert check_jsd(L, x, y1, y2) == HOLDS
    return "500 trials in each of R^2, R^3"


@criterion(6, "snowflake lattice")
def test_criterion_06_snowflake():
    a = snow_join(S1, S2)
    b = snow_meet(a, S3)
    c = snow_join(b, S2)
    assert (str(a), str(b), str(c)) == ("[1,1,2]", "[inf,inf,2]", "[3,1,2]")
    gen = snow_generate(6)
    assert all(v is INF or (v.denominator == 1 and v >= 1) for e in gen.elements for v in e.a)
    assert set(range(1, 7)) <= set(gen.components)
    chain = descending_chain(10)
    assert len(chain) == 10 and all(y.leq(x) and x != y for x, y in zip(chain, chain[1:]))
    vals = [F(k) for k in range(1, 6)] + [INF]
    elems = all_snow_elements(vals)
    cfg = hexagon_config()
    stars = {u: snow_to_star(cfg, u) for u in elems}
    mism = 0
    for u in elems:
        for v in elems:
            mism += star_join(stars[u], stars[v]) != snow_to_star(cfg, snow_join(u, v))
            mism += star_meet(stars[u], stars[v]) != snow_to_star(cfg, snow_meet(u, v))
    assert mism == 0
    return f"{len(elems)} elements, {len(elems) ** 2} pairs, 0 mismatches"


@criterion(7, "ascending chain of star-convex sets")
def test_criterion_07_ascending_chain():
    r = ascending_chain_experiment(10)
    assert r.strict_ascents == 10
    for e in r.elements:
        assert circuit_conditions_hold(e) and geometric_closure(e.config, e.a) == e.a
    for lo, hi in zip(r.elements, r.elements[1:]):
        assert star_leq(lo, hi) and lo != hi
    return f"{r.strict_ascents} strict ascents"


@criterion(8, "partitions vs difference subspaces")
def test_criterion_08_equiv():
    for size, count in ((3, 5), (4, 15)):
        rep = verify_isomorphism(size)
        assert rep["partitions"] == rep["subspaces"] == count
        assert rep["psi_phi_identity"] and rep["phi_psi_identity"]
        assert rep["order_preserved"] and rep["meet_preserved"] and rep["join_preserved"]
        assert rep["isomorphic"]
    return "sizes 3 and 4 (5 and 15 elements)"


@criterion(9, "D_n iff n-Caratheodory on closure systems")
def test_criterion_09_lemma24():
    systems = checks = 0
    seed = 0
    while systems < 200:
        C = random_closure_system(f"acc9:{seed}", max_points=6)
        seed += 1
        reps = [check_lemma24(C, n) for n in (1, 2, 3)]
        if any(r.status != "checked" for r in reps):
            continue
        systems += 1
        for r in reps:
            assert r.agrees, (C.to_json(), r.to_json())
            checks += 1
    line = from_ground_set(GroundSet([(F(i),) for i in range(4)]))
    pos = check_lemma24(line, 2)
    assert pos.status == "checked" and pos.dn_holds and pos.caratheodory_holds
    neg = check_lemma24(ClosureSystem("abcd", [([0, 1, 2], 3)]), 2)
    assert neg.status == "checked" and not neg.dn_holds and not neg.caratheodory_holds
    return f"{systems} systems ({seed} drawn), {checks} checks, 0 discrepancies"


@criterion(10, "hull meets in dimension one")
def test_criterion_10_r1_meet():
    rng = random.Random("acc10")
    for _ in range(500):
        pts = sorted({F(rng.randint(-30, 30), rng.randint(1, 4)) for _ in range(rng.randint(1, 9))})
        G = GroundSet([(p,) for p in pts])
        x = rel_closure(G, rng.sample(range(len(pts)), rng.randint(0, len(pts))))
        y = rel_closure(G, rng.sample(range(len(pts)), rng.randint(0, len(pts))))
        assert hull_lattice_R1_meet_check(G, x, y)
        # independent interval arithmetic
        if x and y:
            lo = max(min(pts[i] for i in x), min(pts[i] for i in y))
            hi = min(max(pts[i] for i in x), max(pts[i] for i in y))
            inter = x & y
            if lo > hi:
                assert not inter
            else:
                assert inter and (min(pts[i] for i in inter), max(pts[i] for i in inter)) == (lo, hi)
    return "500 cases"


@criterion(11, "polar duality")
def test_criterion_11_duality():
    for n in (2, 3):
        cube = hull([tuple(F(1 if (m >> i) & 1 else -1) for i in range(n)) for m in range(1 << n)], n)
        cross = hull([tuple(F(s) if i == j else F(0) for i in range(n)) for j in range(n) for s in (1, -1)], n)
        assert polar_dual(cube) == cross and polar_dual(cross) == cube
    rng = random.Random("acc11")
    for k in range(200):
        n = 2 + k % 2
        pts = [oracles.rand_point(rng, n, 3, 3) for _ in range(rng.randint(1, 5))]
        # small cross-polytope keeps the origin interior
        eps = F(1, rng.randint(2, 5))
        pts += [tuple(s * eps if i == j else F(0) for i in range(n)) for j in range(n) for s in (1, -1)]
        P = hull(pts, n)
        assert polar_dual(polar_dual(P)) == P
    return "cube/cross-polytope in dims 2, 3; 200 involutions"


def _random_term(rng, depth=4):
    if depth == 0 or rng.random() < 0.25:
        return Var(rng.choice(["x", "y1", "y2", "y3", "z", "zp"]))
    cls = Meet if rng.random() < 0.5 else Join
    return cls(_random_term(rng, depth - 1), _random_term(rng, depth - 1))


@criterion(12, "determinism and DSL round trips")
def test_criterion_12_determinism(tmp_path):
    commands = [
        ["falsify", "--lattice", "conv:2", "--identity", "D:2", "--trials", "400", "--seed", "7"],
        ["falsify", "--lattice", "pointed:2", "--identity", "D:2", "--trials", "100", "--seed", "7"],
        ["check", "--lattice", "conv:2", "--identity", "D:2", "--gallery", "dn_fail_conv"],
    ]
    for cmd in commands:
        a, b = run_cli(*cmd), run_cli(*cmd)
        assert a.returncode == b.returncode == 0, a.stderr
        ja, jb = strip_timestamps(json.loads(a.stdout)), strip_timestamps(json.loads(b.stdout))
        assert json.dumps(ja) == json.dumps(jb)
    rng = random.Random("acc12")
    for _ in range(100):
        t = _random_term(rng)
        assert parse_term(print_term(t)) == t
    return f"{len(commands)} commands repeated, 100 round trips"
