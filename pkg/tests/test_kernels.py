import os
import random
import subprocess
import sys
from fractions import Fraction as F

import pytest

from convlat import kernels
from convlat.kernels import _pykernels

from conftest import run_cli

try:
    from convlat.kernels import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])


def box_rows(dim, extra, rng):
    rows = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        rows.append([3] + [-v for v in e])
        rows.append([3] + e)
    for _ in range(extra):
        a = [rng.randint(-4, 4) for _ in range(dim)]
        rows.append([rng.randint(2, 6)] + [-v for v in a])
    rows.append([1] + [0] * dim)
    return rows


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda m: m.BACKEND)
def test_dd_unit_square(backend):
    rays = backend.dd_extreme_rays(box_rows(2, 0, random.Random(0)), 3)
    verts = {tuple(F(r[i], r[0]) for i in (1, 2)) for r in rays if r[0]}
    assert verts == {(F(a), F(b)) for a in (-3, 3) for b in (-3, 3)}


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda m: m.BACKEND)
def test_dd_rejects_lineality(backend):
    with pytest.raises(ValueError):
        backend.dd_extreme_rays([[1, 0, 0], [0, 1, 0]], 3)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda m: m.BACKEND)
def test_simplex_small(backend):
    # max x1 + x2 s.t. x1 + x2 + s = 4
    status, xnum, den, obj = backend.simplex_max([[1, 1, 1]], [4], [1, 1, 0])
    assert status == "optimal" and F(obj, den) == 4
    assert backend.simplex_max([[1, 1]], [-1], [0, 0])[0] == "infeasible"
    assert backend.simplex_max([[1, -1]], [0], [1, 0])[0] == "unbounded"


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
def test_backends_agree():
    rng = random.Random("agree")
    for _ in range(25):
        dim = rng.randint(2, 3)
        rows = box_rows(dim, rng.randint(0, 4), rng)
        a = sorted(map(tuple, _pykernels.dd_extreme_rays(rows, dim + 1)))
        b = sorted(map(tuple, _ckernels.dd_extreme_rays(rows, dim + 1)))
        assert a == b
    for _ in range(60):
        m, k = rng.randint(1, 5), rng.randint(2, 8)
        A = [[rng.randint(-4, 6) for _ in range(k)] for _ in range(m)]
        x = [rng.randint(0, 3) for _ in range(k)]
        b = [sum(p * q for p, q in zip(r, x)) for r in A]
        c = [rng.randint(-3, 3) for _ in range(k)]
        ra, rb = _pykernels.simplex_max(A, b, c), _ckernels.simplex_max(A, b, c)
        assert ra[0] == rb[0]
        if ra[0] == "optimal":
            assert F(ra[3], ra[2]) == F(rb[3], rb[2])


def test_pure_fallback_selected_by_env():
    proc = run_cli("--help", env={"CONVLAT_PURE": "1"})
    assert proc.returncode == 0
    out = subprocess.run(
        [sys.executable, "-c", "import convlat.kernels as k; print(k.BACKEND)"],
        capture_output=True, text=True, env={**os.environ, "CONVLAT_PURE": "1"},
    )
    assert out.stdout.strip() == _pykernels.BACKEND


def test_default_backend_is_compiled_when_built():
    expected = _ckernels.BACKEND if _ckernels is not None else _pykernels.BACKEND
    assert kernels.BACKEND == expected
