"""Builders for the identity schemes studied here, plus wrap and dualize."""

from __future__ import annotations

from itertools import combinations
from typing import List

from .ast import (
    HOLE,
    Identity,
    Join,
    Meet,
    Term,
    Var,
    count_var,
    dual_term,
    join_of,
    meet_of,
    substitute,
    variables,
)

_FLIP = {None: None, "<=": ">=", ">=": "<="}


def _ys(k: int) -> List[Var]:
    return [Var(f"y{i}") for i in range(1, k + 1)]


def build_Dn(n: int) -> Identity:
    """x & (y1 | ... | y_{n+1}) = join over i of (x & join_{j != i} y_j)."""
    if n < 1:
        raise ValueError("D_n needs n >= 1")
    x = Var("x")
    ys = _ys(n + 1)
    lhs = Meet(x, join_of(ys))
    rhs = join_of([Meet(x, join_of([y for j, y in enumerate(ys) if j != i])) for i in range(n + 1)])
    return Identity(lhs, rhs, "=", name=f"D_{n}", automatic=">=")


def dualize(identity: Identity) -> Identity:
    """Interchange meets and joins; an inequation a <= b becomes b* <= a*."""
    name = identity.name
    if name.startswith("dual(") and name.endswith(")"):
        name = name[5:-1]
    elif name.endswith("^op"):
        name = name[:-3]
    elif name:
        name = f"{name}^op" if name.startswith("D_") else f"dual({name})"
    lhs, rhs = dual_term(identity.lhs), dual_term(identity.rhs)
    if identity.mode == "<=":
        # a <= b dualizes to a* >= b*, stored with the sides swapped
        return Identity(rhs, lhs, "<=", name=name, automatic=identity.automatic,
                        free_vars=_order(rhs, lhs, identity.free_vars))
    return Identity(lhs, rhs, "=", name=name, automatic=_FLIP[identity.automatic],
                    free_vars=identity.free_vars)


def _order(lhs: Term, rhs: Term, preferred) -> tuple:
    present = set(variables(lhs)) | set(variables(rhs))
    return tuple(v for v in preferred if v in present)


def build_Dn_op(n: int) -> Identity:
    """x | (y1 & ... & y_{n+1}) = meet over i of (x | meet_{j != i} y_j)."""
    return dualize(build_Dn(n))


def build_Dn_N_ary(n: int, N: int) -> Identity:
    """x & join_{i<=N} y_i = join over (n+1)-subsets I of (x & join_I y)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if N < n + 2:
        raise ValueError(f"N-ary form needs N >= n+2 = {n + 2}")
    x = Var("x")
    ys = _ys(N)
    lhs = Meet(x, join_of(ys))
    # reverse lexicographic order: for N = n+2 this drops y_1, then y_2, ...
    subsets = list(combinations(range(N), n + 1))[::-1]
    rhs = join_of([Meet(x, join_of([ys[i] for i in s])) for s in subsets])
    return Identity(lhs, rhs, "=", name=f"D_{n}^[{N}]", automatic=">=")


def wrap(identity: Identity, context: Term, name: str = "") -> Identity:
    """Substitute both sides of ``identity`` for the single HOLE in ``context``.

    Contexts are lattice polynomials, hence monotone, so an automatic
    direction survives wrapping.
    """
    k = count_var(context, HOLE.name)
    if k == 0:
        raise ValueError("context has no HOLE")
    if k > 1:
        raise ValueError(f"HOLE occurs {k} times in the context")
    lhs = substitute(context, {HOLE.name: identity.lhs})
    rhs = substitute(context, {HOLE.name: identity.rhs})
    fresh = [v for v in variables(context) if v != HOLE.name and v not in identity.free_vars]
    if context == HOLE:
        return identity
    return Identity(lhs, rhs, identity.mode, name=name or f"wrap({identity.name})",
                    automatic=identity.automatic, free_vars=tuple(identity.free_vars) + tuple(fresh))


def theorem41_context() -> Term:
    """(HOLE | z) & y1 & y2."""
    return Meet(Meet(Join(HOLE, Var("z")), Var("y1")), Var("y2"))


def x27_context(n: int) -> Term:
    """(HOLE | z) & join over pairs i < j of (y_i & y_j), i, j <= n+1."""
    ys = _ys(n + 1)
    pairs = [Meet(ys[i], ys[j]) for i, j in combinations(range(n + 1), 2)]
    return Meet(Join(HOLE, Var("z")), join_of(pairs))


def x26_context(n: int) -> Term:
    """(HOLE | z) & meet over i of (join_{j != i} y_j)."""
    ys = _ys(n + 1)
    parts = [join_of([y for j, y in enumerate(ys) if j != i]) for i in range(n + 1)]
    return Meet(Join(HOLE, Var("z")), meet_of(parts))


def theorem53_context(n: int) -> Term:
    """((HOLE & zp) | z) & y1 & ... & y_{n+1}; ``zp`` plays z'."""
    return Meet(Join(Meet(HOLE, Var("zp")), Var("z")), meet_of(_ys(n + 1)))


def build_wrapped_Dn(n: int) -> Identity:
    return wrap(build_Dn(n), theorem41_context(), name=f"((D_{n})|z)&y1&y2")


def build_x27(n: int) -> Identity:
    return wrap(build_Dn(n), x27_context(n), name=f"x27[D_{n}]")


def build_x26(n: int) -> Identity:
    return wrap(build_Dn(n), x26_context(n), name=f"x26[D_{n}]")


def build_wrapped_Dn_op(n: int) -> Identity:
    return wrap(build_Dn_op(n), theorem53_context(n), name=f"(((D_{n}^op)&zp)|z)&meet(y)")


def build_radon_identity(n: int) -> Identity:
    """meet_i (x | y_i) <= x | join over splits {I1, I2} of (join_I1 y) & (join_I2 y).

    The y_i run over i = 1..n+2 and each unordered split appears once, with
    y1 always on the I1 side.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Var("x")
    ys = _ys(n + 2)
    lhs = meet_of([Join(x, y) for y in ys])
    rest = list(range(1, n + 2))
    parts = []
    for r in range(0, len(rest)):
        for extra in combinations(rest, r):
            I1 = (0,) + extra
            I2 = [i for i in range(n + 2) if i not in I1]
            parts.append(Meet(join_of([ys[i] for i in I1]), join_of([ys[i] for i in I2])))
    rhs = Join(x, join_of(parts))
    return Identity(lhs, rhs, "<=", name=f"radon_{n}", automatic=None)


def radon_partition_count(identity: Identity) -> int:
    """Number of split joinands in a Radon identity built above."""
    t = identity.rhs.right
    count = 1
    while isinstance(t, Join):
        count += 1
        t = t.left
    return count


def builtin_identity(spec: str) -> Identity:
    """Resolve names like ``D:2``, ``Dop:2``, ``radon:1``, ``wrapped-D:2``.

    Also accepted: ``wrapped-Dop:k``, ``x27:k``, ``x26:k``, ``DN:n:N`` and
    ``dual-radon:n``.
    """
    parts = spec.split(":")
    head, args = parts[0], parts[1:]
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise ValueError(f"bad builtin identity {spec!r}: arguments must be integers") from None
    table = {
        "D": (1, build_Dn),
        "Dop": (1, build_Dn_op),
        "radon": (1, build_radon_identity),
        "dual-radon": (1, lambda n: dualize(build_radon_identity(n))),
        "wrapped-D": (1, build_wrapped_Dn),
        "wrapped-Dop": (1, build_wrapped_Dn_op),
        "x27": (1, build_x27),
        "x26": (1, build_x26),
        "DN": (2, build_Dn_N_ary),
    }
    if head not in table:
        raise ValueError(f"unknown builtin identity {spec!r}; known: {', '.join(sorted(table))}")
    arity, fn = table[head]
    if len(nums) != arity:
        raise ValueError(f"builtin {head!r} takes {arity} integer argument(s)")
    return fn(*nums)
