"""Run gallery entries, optionally in parallel, with a deterministic report."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from .entries import REGISTRY, build_entry


def _tasks(filter: Optional[str]) -> List[Tuple[str, Optional[int]]]:
    out = []
    for name, (_, params) in REGISTRY.items():
        for n in params:
            key = name if n is None else f"{name}[n={n}]"
            if filter is None or filter in key:
                out.append((name, n))
    return out


def run_entry(name: str, n: Optional[int] = None) -> dict:
    return build_entry(name, n).run()


def _run_task(task):
    return run_entry(*task)


def run_all(filter: Optional[str] = None, workers: int = 1) -> dict:
    tasks = _tasks(filter)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    results.sort(key=lambda r: r["entry"])
    return {
        "filter": filter,
        "entries": results,
        "passed": sum(r["pass"] for r in results),
        "total": len(results),
        "pass": bool(results) and all(r["pass"] for r in results),
    }
