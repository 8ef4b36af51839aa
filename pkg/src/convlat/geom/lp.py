"""Exact linear programming in standard form over Q.

Thin rational front end to the integer simplex kernel: each equality row and
the objective are scaled to integers, solved, and the basic solution is
returned as Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from ..kernels import simplex_max
from .rational import lcm_of_denominators


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: Optional[List[Fraction]] = None
    value: Optional[Fraction] = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def solve_lp(A: Sequence[Sequence], b: Sequence, c: Sequence | None = None) -> LPResult:
    """Maximize ``c.x`` subject to ``A x = b``, ``x >= 0``.

    With ``c`` omitted this is a pure feasibility problem; the returned
    point is then a basic feasible solution (at most ``len(A)`` nonzeros).
    """
    ncols = len(A[0]) if A else (len(c) if c is not None else 0)
    A_int, b_int = [], []
    for row, rhs in zip(A, b):
        vals = [Fraction(v) for v in row] + [Fraction(rhs)]
        m = lcm_of_denominators(vals)
        A_int.append([int(v * m) for v in vals[:-1]])
        b_int.append(int(vals[-1] * m))
    if c is None:
        c_int = [0] * ncols
        cscale = 1
    else:
        cvals = [Fraction(v) for v in c]
        cscale = lcm_of_denominators(cvals)
        c_int = [int(v * cscale) for v in cvals]
    status, xnum, den, objnum = simplex_max(A_int, b_int, c_int)
    if status != "optimal":
        return LPResult(status)
    x = [Fraction(v, den) for v in xnum]
    return LPResult(status, x, Fraction(objnum, den * cscale))


def feasible_point(A: Sequence[Sequence], b: Sequence) -> Optional[List[Fraction]]:
    res = solve_lp(A, b)
    return res.x if res.status == "optimal" else None
