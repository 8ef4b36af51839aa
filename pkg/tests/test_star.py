import random
from fractions import Fraction as F
from itertools import product

import pytest

from convlat.star import (
    INF,
    S1,
    S2,
    S3,
    SnowflakeError,
    StarConfig,
    StarError,
    ascending_chain_experiment,
    circuits,
    descending_chain,
    eval_snow_expr,
    format_ext,
    geometric_closure,
    hexagon_config,
    octagon_exploration,
    parse_ext,
    parse_snow,
    snow,
    snow_generate,
    snow_join,
    snow_meet,
    snow_sublattice,
    snow_to_star,
    star_closure,
    star_join,
    star_meet,
)
from convlat.star.snowflake import all_snow_elements
from convlat.star.stars import circuit_conditions_hold, is_star_convex, star_leq

VALS = [F(k) for k in range(1, 6)] + [INF]
ELEMS = all_snow_elements(VALS)


# --- extended rationals -------------------------------------------------------


def test_ext_parse_format():
    assert parse_ext("inf") is INF and parse_ext("∞") is INF
    assert parse_ext("3/2") == F(3, 2)
    assert format_ext(INF) == "inf" and format_ext(F(5, 4)) == "5/4"
    assert INF + F(1) is INF and F(1) < INF and not INF < INF


# --- snowflake arithmetic ---------------------------------------------------------


def test_worked_values():
    a = snow_join(S1, S2)
    assert str(a) == "[1,1,2]"
    b = snow_meet(a, S3)
    assert str(b) == "[inf,inf,2]"
    assert str(snow_join(b, S2)) == "[3,1,2]"


def test_expression_evaluator():
    assert str(eval_snow_expr("S1 | S2")) == "[1,1,2]"
    assert str(eval_snow_expr("([1,∞,∞] | [∞,1,∞]) & S3 | S2")) == "[3,1,2]"
    assert eval_snow_expr("S1 | S2 & S3") == snow_join(S1, snow_meet(S2, S3))
    for bad in ("S1 |", "(S1 | S2", "S4", "[1,1]", "S1 S2"):
        with pytest.raises(SnowflakeError):
            eval_snow_expr(bad)


def test_triangle_condition_enforced():
    with pytest.raises(SnowflakeError):
        snow(1, 1, 3)
    with pytest.raises(SnowflakeError):
        snow("1/2", INF, INF)
    with pytest.raises(SnowflakeError):
        parse_snow("[1,2")
    assert parse_snow("[2, 2, 3]") == snow(2, 2, 3)


def test_first_join_layer():
    layer = {str(snow_join(u, v)) for u in (S1, S2, S3) for v in (S1, S2, S3) if u != v}
    assert layer == {"[1,1,2]", "[1,2,1]", "[2,1,1]"}


def test_lattice_axioms_pairs():
    for u in ELEMS:
        for v in ELEMS:
            j, m = snow_join(u, v), snow_meet(u, v)
            assert j == snow_join(v, u) and m == snow_meet(v, u)
            assert u.leq(j) and v.leq(j) and m.leq(u) and m.leq(v)
            assert snow_meet(u, j) == u and snow_join(u, m) == u


def test_lattice_axioms_triples_sampled():
    rng = random.Random("snow3")
    for _ in range(4000):
        u, v, w = (rng.choice(ELEMS) for _ in range(3))
        assert snow_join(snow_join(u, v), w) == snow_join(u, snow_join(v, w))
        assert snow_meet(snow_meet(u, v), w) == snow_meet(u, snow_meet(v, w))


def test_join_is_least_upper_bound():
    for u in ELEMS[::3]:
        for v in ELEMS[::2]:
            j = snow_join(u, v)
            uppers = [w for w in ELEMS if u.leq(w) and v.leq(w)]
            assert all(j.leq(w) for w in uppers)


def test_generation_components():
    gen = snow_generate(6)
    assert gen.truncated
    assert gen.components == [1, 2, 3, 4, 5, 6]
    for e in gen.elements:
        for v in e.a:
            assert v is INF or (v.denominator == 1 and v >= 1)


def test_finite_generators_give_finite_sublattice():
    gens = [snow(2, 3, 4), snow(3, 3, 3), snow(5, 4, 2)]
    gen = snow_sublattice(gens)
    assert not gen.truncated
    top = max(max(g.a) + max(g.a) for g in gens)
    assert all(v <= top for e in gen.elements for v in e.a)


def test_descending_chain():
    chain = descending_chain(10)
    assert len(chain) == 10
    assert chain[0] == S1
    for a, b in zip(chain, chain[1:]):
        assert b.leq(a) and a != b
    assert chain[1] == snow(2, INF, INF)


# --- circuits and stars ------------------------------------------------------------


def test_key_circuit():
    (c,) = circuits([(1, 0), (1, 1), (0, 1)])
    assert c.members == (0, 1, 2) and c.coefficients == (1, -1, 1) and c.distinguished == 1


def test_quadrilateral_circuit_unflagged():
    cs = circuits([(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)])
    assert len(cs) == 1 and not cs[0].flagged


def test_opposite_rays_form_two_circuit():
    (c,) = circuits([(1, 0), (-1, 0)])
    assert c.members == (0, 1) and not c.flagged


def test_circuit_errors():
    with pytest.raises(StarError):
        circuits([(0, 0), (1, 0)])
    with pytest.raises(StarError):
        circuits([(1, 0), (2, 0)])


def test_hexagon_conditions_are_neighbour_triangles():
    cfg = hexagon_config()
    flagged = {(c.distinguished, tuple(sorted(i for i, _ in c.bound_terms()))) for c in cfg.flagged}
    expected = {(j, tuple(sorted(((j - 1) % 6, (j + 1) % 6)))) for j in range(6)}
    assert expected <= flagged


def test_symmetric_hexagon_reduces_to_snowflake():
    cfg = hexagon_config()
    for u in ELEMS:
        s = snow_to_star(cfg, u)
        assert is_star_convex(s)
    for a in product(VALS, repeat=3):
        sym = a + a
        closed = star_closure(cfg, sym).a
        ok = a[0] <= a[1] + a[2] and a[1] <= a[0] + a[2] and a[2] <= a[0] + a[1]
        assert (closed == sym) == ok


def test_star_closure_repair_matches_snow_join():
    cfg = hexagon_config()
    u, v = S1, S2
    raw = tuple(min(x, y) for x, y in zip(snow_to_star(cfg, u).a, snow_to_star(cfg, v).a))
    assert star_closure(cfg, raw) == snow_to_star(cfg, snow_join(u, v))


def test_hexagon_model_matches_arithmetic():
    cfg = hexagon_config()
    stars = {u: snow_to_star(cfg, u) for u in ELEMS}
    for u in ELEMS:
        for v in ELEMS:
            assert star_join(stars[u], stars[v]) == snow_to_star(cfg, snow_join(u, v))
            assert star_meet(stars[u], stars[v]) == snow_to_star(cfg, snow_meet(u, v))


def test_star_closure_matches_geometric_oracle():
    cfg = hexagon_config()
    rng = random.Random("geo")
    vals = [F(1), F(3, 2), F(2), F(3), INF]
    for _ in range(60):
        a = tuple(rng.choice(vals) for _ in range(6))
        if all(v is INF for v in a):
            continue
        assert star_closure(cfg, a).a == geometric_closure(cfg, a)


def test_star_lattice_laws_small_config():
    cfg = StarConfig([(0, 3), (1, 2), (2, 1), (3, 0)])
    vals = [F(1), F(2), F(3), INF]
    elems = {star_closure(cfg, a) for a in product(vals, repeat=4)}
    elems = sorted(elems, key=str)
    for u in elems:
        for v in elems:
            j = star_join(u, v)
            assert star_leq(u, j) and star_leq(v, j)
            assert star_meet(u, j) == u
            assert is_star_convex(star_meet(u, v))


def test_star_element_validation():
    cfg = hexagon_config()
    with pytest.raises(StarError):
        cfg.element([1, 1, 1])
    with pytest.raises(StarError):
        cfg.element(["1/2", 1, 1, 1, 1, 1])


# --- experiments ------------------------------------------------------------------------


def test_ascending_chain():
    r = ascending_chain_experiment(10)
    assert r.strict_ascents == 10 and r.all_convex and r.all_below_y
    assert len(r.elements) == 11
    for e in r.elements:
        assert circuit_conditions_hold(e)
        assert geometric_closure(e.config, e.a) == e.a
    # inverse lengths on the two middle rays approach 1 from above
    assert str(r.elements[0]) == "[inf,2,inf,inf]"
    assert r.elements[-1].a[1] == 1 + F(1, 4 ** 5)
    with pytest.raises(ValueError):
        ascending_chain_experiment(0)


def test_octagon_exploration():
    r = octagon_exploration(200)
    assert len(r.elements) > 50
    assert len(r.longest_chain) >= 10 and len(r.antichain) >= 5
    for a, b in zip(r.longest_chain, r.longest_chain[1:]):
        assert star_leq(a, b) and a != b
    for i, a in enumerate(r.antichain):
        for b in r.antichain[i + 1:]:
            assert not star_leq(a, b) and not star_leq(b, a)
    assert len({str(e) for e in r.elements[:4]}) == 4
