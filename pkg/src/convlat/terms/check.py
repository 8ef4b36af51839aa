"""Evaluate identities on lattice elements; search for counterexamples."""

from __future__ import annotations

import random
import time
from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from itertools import combinations
from typing import Any, Dict, Optional, Sequence

from .ast import Identity, Join, Meet, Term, Var, print_identity

HOLDS, FAILS, VACUOUS = "Holds", "Fails", "Vacuous"


class LatticeMismatch(ValueError):
    """An element does not belong to the lattice it is used with."""


@dataclass(frozen=True)
class SamplerConfig:
    """Random generator lists: each element is the lattice closure of
    ``min_points..max_points`` random points with coordinates p/q,
    1 <= q <= ``denominator`` and |p/q| <= ``coord_bound``."""

    dim: int
    min_points: int = 1
    max_points: int = 3
    denominator: int = 3
    coord_bound: int = 2
    include_origin: bool = False

    def validate(self) -> None:
        if self.dim < 1:
            raise ValueError("sampler dim must be >= 1")
        if not 1 <= self.min_points <= self.max_points:
            raise ValueError("sampler needs 1 <= min_points <= max_points")
        if self.denominator < 1 or self.coord_bound < 1:
            raise ValueError("sampler denominator and coord_bound must be >= 1")


class LatticeHandle(ABC):
    """Uniform access to a lattice whose elements are hashable values."""

    selector: str = ""

    @abstractmethod
    def meet(self, a, b): ...

    @abstractmethod
    def join(self, a, b): ...

    @abstractmethod
    def leq(self, a, b) -> bool: ...

    def equal(self, a, b) -> bool:
        return a == b

    def validate(self, e) -> None:
        """Raise LatticeMismatch if ``e`` is not an element."""

    def describe(self, e) -> Any:
        return repr(e)

    def parse_element(self, obj):
        raise LatticeMismatch(f"{type(self).__name__} cannot parse element literals")

    def sample(self, rng: random.Random, config: Optional[SamplerConfig]):
        raise ValueError(f"{type(self).__name__} has no sampler")

    def check_sampler(self, config: SamplerConfig) -> None:
        """Raise ValueError when ``config`` does not fit this lattice."""

    def witness(self, big, small) -> Optional[Any]:
        """A JSON-ready point of ``big`` outside ``small``, when meaningful."""
        return None


class DualHandle(LatticeHandle):
    """The order dual: meets and joins interchanged."""

    def __init__(self, base: LatticeHandle):
        self.base = base
        self.selector = f"dual({base.selector})"

    def meet(self, a, b):
        return self.base.join(a, b)

    def join(self, a, b):
        return self.base.meet(a, b)

    def leq(self, a, b):
        return self.base.leq(b, a)

    def equal(self, a, b):
        return self.base.equal(a, b)

    def validate(self, e):
        self.base.validate(e)

    def describe(self, e):
        return self.base.describe(e)


def evaluate(term: Term, lattice: LatticeHandle, assignment: Dict[str, Any], memo=None):
    if memo is None:
        memo = {}
    got = memo.get(term)
    if got is not None:
        return got
    if isinstance(term, Var):
        if term.name not in assignment:
            raise KeyError(f"no value assigned to variable {term.name!r}")
        val = assignment[term.name]
    else:
        a = evaluate(term.left, lattice, assignment, memo)
        b = evaluate(term.right, lattice, assignment, memo)
        val = lattice.meet(a, b) if isinstance(term, Meet) else lattice.join(a, b)
    memo[term] = val
    return val


@dataclass
class CheckReport:
    identity: Identity
    lattice: str
    assignment: Dict[str, Any]
    verdict: str
    witness: Optional[Any] = None
    witness_side: Optional[str] = None
    automatic_ok: Optional[bool] = None
    seed: Optional[Any] = None
    trial: Optional[int] = None
    trials: int = 1
    elapsed_s: float = 0.0
    values: Dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_json(self, lattice: Optional[LatticeHandle] = None) -> dict:
        desc = (lambda e: lattice.describe(e)) if lattice is not None else repr
        return {
            "identity": print_identity(self.identity),
            "identity_name": self.identity.name,
            "lattice": self.lattice,
            "verdict": self.verdict,
            "assignment": {k: desc(v) for k, v in self.assignment.items()},
            "values": {k: desc(v) for k, v in self.values.items()},
            "witness": self.witness,
            "witness_side": self.witness_side,
            "automatic_ok": self.automatic_ok,
            "seed": self.seed,
            "trial": self.trial,
            "trials": self.trials,
            "timestamp": {
                "utc": datetime.now(timezone.utc).isoformat(timespec="seconds"),
                "elapsed_s": round(self.elapsed_s, 6),
            },
        }


def check(identity: Identity, lattice: LatticeHandle, assignment: Dict[str, Any]) -> CheckReport:
    """Verdict of ``identity`` on one assignment.

    On failure the report carries a witness: an element of the side that
    is not below the other side (a vertex, for polytope lattices).
    """
    t0 = time.perf_counter()
    missing = [v for v in identity.free_vars if v not in assignment]
    if missing:
        raise KeyError(f"assignment misses variables: {', '.join(missing)}")
    for v in identity.free_vars:
        lattice.validate(assignment[v])
    memo: dict = {}
    lhs = evaluate(identity.lhs, lattice, assignment, memo)
    rhs = evaluate(identity.rhs, lattice, assignment, memo)
    lhs_le = lattice.leq(lhs, rhs)
    rhs_le = (lhs_le and lattice.equal(lhs, rhs)) or lattice.leq(rhs, lhs)
    if identity.mode == "<=":
        holds = lhs_le
    else:
        holds = lhs_le and rhs_le
    auto = None
    if identity.automatic == ">=":
        auto = rhs_le
    elif identity.automatic == "<=":
        auto = lhs_le
    witness = side = None
    if not holds:
        if not lhs_le:
            witness, side = lattice.witness(lhs, rhs), "lhs"
        else:
            witness, side = lattice.witness(rhs, lhs), "rhs"
    return CheckReport(
        identity=identity,
        lattice=lattice.selector,
        assignment={v: assignment[v] for v in identity.free_vars},
        verdict=HOLDS if holds else FAILS,
        witness=witness,
        witness_side=side,
        automatic_ok=auto,
        elapsed_s=time.perf_counter() - t0,
        values={"lhs": lhs, "rhs": rhs},
    )


def trial_rng(seed, trial: int) -> random.Random:
    """Independent per-trial generator, so trials can run in any order."""
    return random.Random(f"{seed}:{trial}")


def sample_assignment(identity: Identity, lattice: LatticeHandle, config, seed, trial: int) -> Dict[str, Any]:
    rng = trial_rng(seed, trial)
    return {v: lattice.sample(rng, config) for v in identity.free_vars}


def _scan(identity, lattice, config, seed, start, stop):
    """Lowest failing trial in [start, stop) and the number of automatic-direction breaches."""
    breaches = 0
    for t in range(start, stop):
        rep = check(identity, lattice, sample_assignment(identity, lattice, config, seed, t))
        if rep.automatic_ok is False:
            breaches += 1
        if not rep.holds:
            return t, breaches
    return None, breaches


@dataclass
class FalsifyResult:
    failure: Optional[CheckReport]
    trials_run: int
    trials: int
    seed: Any
    automatic_breaches: int = 0
    elapsed_s: float = 0.0

    @property
    def found(self) -> bool:
        return self.failure is not None


def falsify(identity: Identity, lattice: LatticeHandle, config, trials: int, seed, workers: int = 1) -> FalsifyResult:
    """Search seeded random assignments for a failure.

    Deterministic given ``seed``: the result is the lowest-index failing
    trial whether the search runs serially or across worker processes.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if config is not None:
        config.validate()
        lattice.check_sampler(config)
    t0 = time.perf_counter()
    first = None
    breaches = 0
    if workers <= 1:
        first, breaches = _scan(identity, lattice, config, seed, 0, trials)
    else:
        chunk = max(1, -(-trials // (workers * 4)))
        bounds = [(s, min(trials, s + chunk)) for s in range(0, trials, chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan, identity, lattice, config, seed, a, b) for a, b in bounds]
            for fut in futures:  # in index order: the first hit is the lowest
                idx, br = fut.result()
                breaches += br
                if idx is not None:
                    first = idx
                    for f in futures:
                        f.cancel()
                    break
    if first is None:
        return FalsifyResult(None, trials, trials, seed, breaches, time.perf_counter() - t0)
    rep = check(identity, lattice, sample_assignment(identity, lattice, config, seed, first))
    rep.seed = seed
    rep.trial = first
    rep.trials = first + 1
    return FalsifyResult(rep, first + 1, trials, seed, breaches, time.perf_counter() - t0)


def check_jsd(lattice: LatticeHandle, x, y1, y2) -> str:
    """x|y1 = x|y2  implies  x|y1 = x|(y1&y2); Vacuous when the premise fails."""
    v1, v2 = lattice.join(x, y1), lattice.join(x, y2)
    if not lattice.equal(v1, v2):
        return VACUOUS
    return HOLDS if lattice.equal(v1, lattice.join(x, lattice.meet(y1, y2))) else FAILS


def check_njsd(lattice: LatticeHandle, n: int, x, ys: Sequence) -> str:
    """All x|y_i equal  implies  x|y_1 = x | join_{i<j} (y_i & y_j)."""
    if len(ys) != n + 1:
        raise ValueError(f"n-join semidistributivity takes n+1 = {n + 1} elements y")
    joins = [lattice.join(x, y) for y in ys]
    if any(not lattice.equal(joins[0], j) for j in joins[1:]):
        return VACUOUS
    acc = None
    for i, j in combinations(range(len(ys)), 2):
        m = lattice.meet(ys[i], ys[j])
        acc = m if acc is None else lattice.join(acc, m)
    concl = lattice.join(x, acc)
    return HOLDS if lattice.equal(joins[0], concl) else FAILS


def check_msd(lattice: LatticeHandle, x, y1, y2) -> str:
    return check_jsd(DualHandle(lattice), x, y1, y2)


def check_nmsd(lattice: LatticeHandle, n: int, x, ys: Sequence) -> str:
    return check_njsd(DualHandle(lattice), n, x, ys)
