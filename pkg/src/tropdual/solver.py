"""Generating sets for solution cones of two-sided max-linear systems.

Each constraint ``<a|x> rel <b|x>`` is eliminated in turn: if ``G`` spans the
solutions of the constraints seen so far, then the solutions of the next one
are ``G lam`` where ``lam`` solves the single inequality ``<aG|lam> <= <bG|lam>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .scalar import EPS, Scalar
from .linalg import (
    DimensionError, TropMatrix, bracket, has_top, in_span, member, normalize, require_rmax,
    unit_vector,
)

LE = "LE"
EQ = "EQ"


@dataclass(frozen=True)
class Constraint:
    a: tuple
    b: tuple
    rel: str = LE

    def __post_init__(self):
        if self.rel not in (LE, EQ):
            raise ValueError(f"relation must be {LE!r} or {EQ!r}, got {self.rel!r}")
        if len(self.a) != len(self.b):
            raise DimensionError(f"constraint sides have lengths {len(self.a)} and {len(self.b)}")
        require_rmax(self.a, "constraint lhs")
        require_rmax(self.b, "constraint rhs")

    def holds(self, x: Sequence[Scalar]) -> bool:
        lhs, rhs = bracket(self.a, x), bracket(self.b, x)
        return lhs <= rhs if self.rel == LE else lhs == rhs

    def as_inequalities(self) -> list[tuple]:
        if self.rel == LE:
            return [(self.a, self.b)]
        return [(self.a, self.b), (self.b, self.a)]


@dataclass(frozen=True)
class ConstraintSystem:
    n: int
    rows: tuple = ()

    def __post_init__(self):
        rows = tuple(self.rows)
        for r in rows:
            if len(r.a) != self.n:
                raise DimensionError(f"constraint of length {len(r.a)} in a system with n={self.n}")
        object.__setattr__(self, "rows", rows)

    def satisfied_by(self, x: Sequence[Scalar]) -> bool:
        return all(r.holds(x) for r in self.rows)


def solve_single_le(a: Sequence[Scalar], b: Sequence[Scalar]) -> TropMatrix:
    """Generators of ``{x : <a|x> <= <b|x>}``.

    Coordinates with ``a_k <= b_k`` are free and give ``e_k``.  Each violating
    coordinate ``j`` (``a_j > b_j``) must be dominated by some free ``k`` with
    ``b_k`` finite, giving ``w`` with ``w_j = b_k - a_j`` and ``w_k = 0``.
    """
    if len(a) != len(b):
        raise DimensionError(f"solve_single_le: lengths {len(a)} and {len(b)}")
    n = len(a)
    good = [k for k in range(n) if a[k] <= b[k]]
    bad = [j for j in range(n) if a[j] > b[j]]
    cols = [unit_vector(n, k) for k in good]
    for j in bad:
        for k in good:
            if b[k] == EPS:
                continue
            w = [EPS] * n
            w[j] = b[k] - a[j]
            w[k] = 0
            cols.append(tuple(w))
    return TropMatrix(n, tuple(cols))


def _multiply_sparse(G: Sequence[tuple], H: TropMatrix, n: int) -> list[tuple]:
    out = []
    for h in H.cols:
        acc = None
        for k, lam in enumerate(h):
            if lam == EPS:
                continue
            g = G[k]
            if acc is None:
                acc = [EPS if e == EPS else e + lam for e in g]
            else:
                for i, e in enumerate(g):
                    if e != EPS and e + lam > acc[i]:
                        acc[i] = e + lam
        out.append(tuple(acc) if acc is not None else (EPS,) * n)
    return out


def prune(G: TropMatrix) -> TropMatrix:
    """Drop generators lying in the span of the others; the span is unchanged."""
    seen = set()
    cols = []
    for c in G.cols:
        if all(e == EPS for e in c):
            continue
        key = normalize(c)
        if key in seen:
            continue
        seen.add(key)
        cols.append(c)
    keep = list(cols)
    if any(has_top(c) for c in keep):
        def redundant(c, others):
            return member(c, TropMatrix(G.n, tuple(others)))
    else:
        redundant = in_span
    i = 0
    while i < len(keep):
        if redundant(keep[i], keep[:i] + keep[i + 1:]):
            del keep[i]
        else:
            i += 1
    return TropMatrix(G.n, tuple(keep))


def solve_system(system: ConstraintSystem, prune_steps: bool = True) -> TropMatrix:
    """Generators of the solution cone of ``system`` by iterated elimination."""
    n = system.n
    G = TropMatrix.identity(n)
    for row in system.rows:
        for a, b in row.as_inequalities():
            if not G.cols:
                return G
            a2 = [bracket(a, c) for c in G.cols]
            b2 = [bracket(b, c) for c in G.cols]
            if all(x <= y for x, y in zip(a2, b2)):
                continue
            H = solve_single_le(a2, b2)
            G = TropMatrix(n, tuple(_multiply_sparse(G.cols, H, n)))
            if prune_steps:
                G = prune(G)
    return prune(G)
