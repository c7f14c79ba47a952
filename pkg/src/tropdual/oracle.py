"""Brute-force ground truth on small grids."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .duality import (
    PairCone, equality_span_of_polar, is_pair_combination, orthogonal_of_cone,
    pair_in_orthogonal, pair_in_polar, polar_of_cone,
)
from .formats import format_vector
from .linalg import DimensionError, TropMatrix, perturb_top, vec_leq
from .scalar import EPS, Scalar, is_finite
from .solver import ConstraintSystem

DEFAULT_VALUES = (EPS, -2, -1, 0, 1, 2)


@dataclass(frozen=True)
class Grid:
    n: int
    values: tuple = DEFAULT_VALUES

    def __post_init__(self):
        if EPS not in self.values or 0 not in self.values:
            raise ValueError("grid values must contain -inf and 0")

    def points(self):
        return itertools.product(self.values, repeat=self.n)

    def __len__(self):
        return len(self.values) ** self.n


def grid_from_spec(n: int, spec: str) -> Grid:
    """Grid from ``lo:hi:step`` (integers), always including -inf and 0."""
    try:
        lo, hi, step = (int(x) for x in spec.split(":"))
    except ValueError:
        raise ValueError(f"grid spec must be lo:hi:step, got {spec!r}") from None
    if step <= 0 or lo > hi:
        raise ValueError(f"bad grid range {spec!r}")
    vals = set(range(lo, hi + 1, step)) | {0}
    return Grid(n, (EPS,) + tuple(sorted(vals)))


def grid_solutions(system: ConstraintSystem, grid: Grid) -> list[tuple]:
    if grid.n != system.n:
        raise DimensionError(f"grid dimension {grid.n} != system dimension {system.n}")
    return [x for x in grid.points() if system.satisfied_by(x)]


def check_max_rep(V: TropMatrix, t: Sequence[Scalar], claimed: Sequence[Scalar], grid: Grid,
                  congruence: bool = False) -> bool:
    """Check a claimed maximal representative of ``t`` by brute force.

    (i) ``(claimed^beta, t)`` lies in the polar (or orthogonal) of ``span(V)``
    for ``beta`` at and above ``max(t)``; (ii) no grid vector ``f`` that is
    not below ``claimed`` has ``(f, t)`` in it.
    """
    if len(t) != V.n or len(claimed) != V.n or grid.n != V.n:
        raise DimensionError("dimension mismatch in check_max_rep")
    inside = pair_in_orthogonal if congruence else pair_in_polar
    finite = [e for e in t if is_finite(e)]
    base = max(finite) if finite else 0
    for beta in (base, base + 1, base + 5):
        if not inside(V, perturb_top(claimed, beta), t):
            return False
    for f in grid.points():
        if not vec_leq(f, claimed) and inside(V, f, t):
            return False
    return True


@dataclass
class GapReport:
    """Equalities valid on a cone that are not combinations of rewritten inequalities."""

    n: int
    inequality_equalities: PairCone
    orthogonal: PairCone
    gap: list = field(default_factory=list)

    def to_text(self) -> str:
        lines = [f"# {len(self.gap)} of {len(self.orthogonal)} orthogonal generators are not "
                 f"combinations of the {len(self.inequality_equalities)} rewritten inequalities"]
        for f, g in self.gap:
            lines.append(f"f: {format_vector(f)}")
            lines.append(f"g: {format_vector(g)}")
        return "\n".join(lines) + "\n"


def farkas_gap_demo(V: TropMatrix) -> GapReport:
    W1 = equality_span_of_polar(polar_of_cone(V))
    W2 = orthogonal_of_cone(V)
    gap = [pair for pair in W2.pairs() if not is_pair_combination(pair, W1)]
    return GapReport(V.n, W1, W2, gap)
