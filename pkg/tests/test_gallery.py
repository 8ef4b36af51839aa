import pytest

from convlat.gallery import (
    REGISTRY,
    GalleryError,
    build_entry,
    dn_fail_conv,
    dnop_fail_conv,
    pythagorean_half_circle,
    radon_fail,
    relconv_d1op_fail,
    relconv_wrapped_fail,
    run_all,
    run_entry,
    wrapped_dn_fail_pointed,
)
from convlat.geom import contains, meet_all, point

import oracles

ALL = [(name, n) for name, (_, params) in REGISTRY.items() for n in params]


@pytest.mark.parametrize("name,n", ALL, ids=[f"{a}-{b}" for a, b in ALL])
def test_entry_reproduces_expected_verdict(name, n):
    rep = run_entry(name, n)
    assert rep["observed"] == rep["expected"] == "Fails"
    assert rep["witness"] is not None and rep["witness_rechecked"]
    assert all(f["holds"] for f in rep["facts"])
    assert all(c["pass"] for c in rep["counterparts"])
    assert rep["pass"]


def test_dn_fail_conv_values():
    assert run_entry("dn_fail_conv", 1)["witness"] == ["1/2"]
    e = dn_fail_conv(2)
    assert e.assignment["x"].vertices == (point("1/3", "1/3"),)
    assert {v for k in ("y1", "y2", "y3") for v in e.assignment[k].vertices} == {point(0, 0), point(1, 0), point(0, 1)}
    assert e.run()["witness"] == ["1/3", "1/3"]


def test_wrapped_dn_fail_pointed_n2_values():
    a = wrapped_dn_fail_pointed(2).assignment
    assert set(a["x"].vertices) == {point(0, 0), point("1/2", 1)}
    assert set(a["y1"].vertices) == {point(0, 0), point(0, 1), point("1/2", "1/2")}
    assert set(a["y2"].vertices) == {point(0, 0), point(1, 1)}
    assert set(a["z"].vertices) == {point(0, 0), point("1/2", 0)}


def test_dnop_fail_conv_n2_values():
    e = dnop_fail_conv(2)
    a = e.assignment
    faces = [set(a[f"y{i}"].vertices) for i in (1, 2, 3)]
    corners = {point(4, 4), point(3, 4), point(4, 3)}
    assert all(len(f) == 2 and f <= corners for f in faces)
    assert meet_all([a[f"y{i}"] for i in (1, 2, 3)], 2).is_empty
    assert not contains(a["x"], point(2, 2))
    assert e.run()["witness"] == ["2", "2"]


def test_radon_fail_split_joinands_empty():
    e = radon_fail(2)
    a = e.assignment
    ys = [a[f"y{i}"].vertices[0] for i in (1, 2, 3)]
    for i in range(3):
        rest = [ys[j] for j in range(3) if j != i]
        assert not oracles.in_hull(rest, ys[i])


def test_relconv_d1op_values():
    e = relconv_d1op_fail()
    L = e.lattice
    pts = [L.ground.points[i] for i in sorted(e.assignment["x"])]
    assert sorted(pts) == [point(-1, 0), point(0, -1)]


def test_pythagorean_points_are_rational_on_circle():
    for k in (4, 5):
        pts = pythagorean_half_circle(k)
        assert len(pts) == k
        assert all(x * x + y * y == 1 and y > 0 for x, y in pts)
        assert len(set(pts)) == k


def test_relconv_wrapped_geometry():
    e = relconv_wrapped_fail(1)
    G = e.lattice.ground
    r = max(G.points, key=lambda p: p[0] ** 2 + p[1] ** 2)
    assert r[0] ** 2 + r[1] ** 2 >= 4


def test_parameter_ranges():
    for fn, bad in ((dn_fail_conv, 4), (dn_fail_conv, 0), (wrapped_dn_fail_pointed, 1), (relconv_wrapped_fail, 3)):
        with pytest.raises(GalleryError):
            fn(bad)
    with pytest.raises(GalleryError):
        build_entry("no_such_entry")


def test_run_all_filter_and_determinism():
    a = run_all("dn_fail_conv")
    assert a["total"] == 3 and a["passed"] == 3 and a["pass"]
    assert a == run_all("dn_fail_conv")
    assert [e["entry"] for e in a["entries"]] == sorted(e["entry"] for e in a["entries"])


def test_counterpart_radon_segments_hold():
    rep = run_entry("radon_fail", 2)
    labels = [c["label"] for c in rep["counterparts"]]
    assert any("segment" in l for l in labels)
