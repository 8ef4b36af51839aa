from fractions import Fraction as F

import pytest

from convlat.abstract import FiniteLatticeHandle, chain, mk_lattice
from convlat.geom import hull, point
from convlat.lattices import PointedPolytopeLattice, PolytopeLattice, jsd_premise_sampler
from convlat.terms import build_Dn, build_radon_identity, parse_identity
from convlat.terms.check import (
    FAILS,
    HOLDS,
    VACUOUS,
    LatticeMismatch,
    SamplerConfig,
    check,
    check_jsd,
    check_msd,
    check_njsd,
    check_nmsd,
    evaluate,
    falsify,
    sample_assignment,
)

import oracles

C2 = PolytopeLattice(2)


def tri():
    return [point(0, 0), point(1, 0), point(0, 1)]


def test_D1_on_two_element_chain():
    H = FiniteLatticeHandle(chain(2))
    for a in range(2):
        for b in range(2):
            for c in range(2):
                assert check(build_Dn(1), H, {"x": a, "y1": b, "y2": c}).holds


def test_dn_fail_witness_is_interior_point():
    p = (F(1, 3), F(1, 3))
    asg = {"x": hull([p], 2), **{f"y{i + 1}": hull([v], 2) for i, v in enumerate(tri())}}
    rep = check(build_Dn(2), C2, asg)
    assert rep.verdict == FAILS
    assert rep.witness == ["1/3", "1/3"] and rep.witness_side == "lhs"
    assert rep.automatic_ok is True
    assert rep.values["rhs"].is_empty


def test_check_rejects_bad_assignment():
    with pytest.raises(KeyError):
        check(build_Dn(1), C2, {"x": hull(tri(), 2)})
    with pytest.raises(LatticeMismatch):
        check(build_Dn(1), C2, {"x": hull([point(0)], 1), "y1": hull(tri(), 2), "y2": hull(tri(), 2)})
    with pytest.raises(LatticeMismatch):
        P = PointedPolytopeLattice(2)
        check(build_Dn(1), P, {"x": hull([point(1, 1)], 2), "y1": P.bottom, "y2": P.bottom})


def test_evaluate_memoizes_shared_subterms():
    ident = parse_identity("(x | y1) & (x | y1) = x | y1")
    asg = {"x": hull([point(0, 0)], 2), "y1": hull([point(1, 1)], 2)}
    memo = {}
    v = evaluate(ident.lhs, C2, asg, memo)
    assert v == hull([point(0, 0), point(1, 1)], 2)
    assert len(memo) == 4  # x, y1, the join, the meet


def test_falsify_D2_conv2_finds_failure():
    res = falsify(build_Dn(2), C2, SamplerConfig(2), 2000, seed=7)
    assert res.found and res.failure.verdict == FAILS
    rep = check(build_Dn(2), C2, sample_assignment(build_Dn(2), C2, SamplerConfig(2), 7, res.failure.trial))
    assert not rep.holds and rep.witness == res.failure.witness
    # the witness is a point of the lhs that the rhs misses
    w = tuple(F(c) for c in res.failure.witness)
    lhs, rhs = res.failure.values["lhs"], res.failure.values["rhs"]
    assert oracles.in_hull(lhs.vertices, w)
    assert not rhs.vertices or not oracles.in_hull(rhs.vertices, w)


@pytest.mark.slow
@pytest.mark.parametrize("ident,lattice", [(build_Dn(3), C2), (build_Dn(2), PointedPolytopeLattice(2)), (build_Dn(2), PolytopeLattice(1))])
def test_falsify_positive_cases(ident, lattice):
    res = falsify(ident, lattice, SamplerConfig(lattice.dim), 2000, seed=7)
    assert not res.found and res.trials_run == 2000 and res.automatic_breaches == 0


def test_falsify_is_deterministic_and_parallel_agrees():
    cfg = SamplerConfig(2)
    a = falsify(build_Dn(2), C2, cfg, 600, seed="det")
    b = falsify(build_Dn(2), C2, cfg, 600, seed="det")
    c = falsify(build_Dn(2), C2, cfg, 600, seed="det", workers=2)
    assert a.found
    assert a.failure.trial == b.failure.trial == c.failure.trial
    assert a.failure.to_json(C2)["assignment"] == c.failure.to_json(C2)["assignment"]


def test_falsify_validates_config():
    with pytest.raises(ValueError):
        falsify(build_Dn(1), C2, SamplerConfig(3), 10, seed=1)
    with pytest.raises(ValueError):
        falsify(build_Dn(1), C2, SamplerConfig(2, min_points=3, max_points=2), 10, seed=1)
    with pytest.raises(ValueError):
        falsify(build_Dn(1), C2, None, 0, seed=1)


def test_report_json_fields():
    asg = {"x": hull(tri(), 2), "y1": hull([point(0, 0)], 2), "y2": hull([point(1, 1)], 2)}
    js = check(build_Dn(1), C2, asg).to_json(C2)
    assert set(js) >= {"identity", "verdict", "assignment", "witness", "timestamp"}
    assert js["assignment"]["x"]["vertices"] == [["0", "0"], ["0", "1"], ["1", "0"]]


# --- semidistributivity ---------------------------------------------------------


def test_jsd_equal_y_holds():
    x, y = hull(tri(), 2), hull([point(2, 2)], 2)
    assert check_jsd(C2, x, y, y) == HOLDS


def test_jsd_vacuous_premise():
    x = hull([point(0, 0)], 2)
    assert check_jsd(C2, x, hull([point(1, 0)], 2), hull([point(0, 1)], 2)) == VACUOUS


def test_m3_fails_jsd_and_msd():
    H = FiniteLatticeHandle(mk_lattice(3))
    a1, a2, a3 = 1, 2, 3
    assert check_jsd(H, a1, a2, a3) == FAILS
    assert check_msd(H, a1, a2, a3) == FAILS
    assert check_njsd(H, 1, a1, [a2, a3]) == FAILS
    assert check_nmsd(H, 1, a1, [a2, a3]) == FAILS
    with pytest.raises(ValueError):
        check_njsd(H, 2, a1, [a2, a3])


@pytest.mark.parametrize("dim", [2, 3])
def test_jsd_premise_sampler_premise_and_conclusion(dim):
    L = PolytopeLattice(dim)
    for seed in range(25):
        x, y1, y2 = jsd_premise_sampler(dim, seed)
        assert L.join(x, y1) == L.join(x, y2)
        assert check_jsd(L, x, y1, y2) == HOLDS


def test_radon_holds_in_its_dimension_and_fails_above():
    assert not falsify(build_radon_identity(1), PolytopeLattice(1), SamplerConfig(1), 200, seed=3).found
    assert falsify(build_radon_identity(1), C2, SamplerConfig(2), 200, seed=3).found
