"""Compare the compiled and pure-Python integer kernels.

    python3 benchmarks/bench_kernels.py [--reps 3] [--json]

Both backends run the same seeded workloads: vertex enumeration of random
polytopes given by inequalities, and random feasibility/optimization LPs.
Results must agree exactly; timings are best-of-reps wall clock.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from convlat.kernels import _pykernels

try:
    from convlat.kernels import _ckernels
except ImportError:
    _ckernels = None


def dd_workload(seed: int, count: int, dim: int, facets: int):
    rng = random.Random(f"dd:{seed}")
    jobs = []
    for _ in range(count):
        # b - a.x >= 0 homogenized as [b, -a]; bounded by a box so rays exist
        rows = []
        for i in range(dim):
            e = [0] * dim
            e[i] = 1
            rows.append([4] + [-v for v in e])
            rows.append([4] + e)
        for _ in range(facets):
            a = [rng.randint(-5, 5) for _ in range(dim)]
            rows.append([rng.randint(3, 9)] + [-v for v in a])
        rows.append([1] + [0] * dim)
        jobs.append((rows, dim + 1))
    return jobs


def lp_workload(seed: int, count: int, m: int, k: int):
    rng = random.Random(f"lp:{seed}")
    jobs = []
    for _ in range(count):
        A = [[rng.randint(-4, 6) for _ in range(k)] for _ in range(m)]
        x = [rng.randint(0, 3) for _ in range(k)]
        b = [sum(a * v for a, v in zip(row, x)) for row in A]
        c = [rng.randint(-3, 3) for _ in range(k)]
        jobs.append((A, b, c))
    return jobs


def _time(fn, jobs, reps):
    best = float("inf")
    out = None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = [fn(*j) for j in jobs]
        best = min(best, time.perf_counter() - t0)
    return best, out


def _canon_dd(res):
    return [sorted(map(tuple, r)) for r in res]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run: python3 setup.py build_ext --inplace", file=sys.stderr)
        return 2
    suites = {
        "dd_3d": (dd_workload(args.seed, 40, 3, 8), "dd_extreme_rays", _canon_dd),
        "dd_4d": (dd_workload(args.seed, 15, 4, 8), "dd_extreme_rays", _canon_dd),
        "simplex_10x20": (lp_workload(args.seed, 150, 10, 20), "simplex_max", lambda r: r),
    }
    rows = []
    for name, (jobs, fn, canon) in suites.items():
        tp, rp = _time(getattr(_pykernels, fn), jobs, args.reps)
        tc, rc = _time(getattr(_ckernels, fn), jobs, args.reps)
        rows.append({"workload": name, "jobs": len(jobs), "python_s": round(tp, 4), "cython_s": round(tc, 4),
                     "speedup": round(tp / tc, 2) if tc else None, "agree": canon(rp) == canon(rc)})
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'workload':<16}{'jobs':>6}{'python s':>11}{'cython s':>11}{'speedup':>9}  agree")
        for r in rows:
            print(f"{r['workload']:<16}{r['jobs']:>6}{r['python_s']:>11.4f}{r['cython_s']:>11.4f}{r['speedup']:>9.2f}  {r['agree']}")
    return 0 if all(r["agree"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
