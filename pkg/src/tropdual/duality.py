"""Polars, orthogonals and their duals for finitely generated max-plus cones.

A pair ``(f, g)`` stands for the inequality ``<f|x> <= <g|x>`` (or the
equality, for congruences).  Sets of pairs are stored as :class:`PairCone`,
a matrix with ``2n`` rows whose top half is ``f`` and bottom half is ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .formats import ParseError, format_matrix, pair_cone_dimension, parse_matrix
from .linalg import (
    DimensionError, TropMatrix, bracket, cone_equal, eps_vector, member, require_rmax, vec_max,
)
from .scalar import TOP, Scalar, t_residual
from .solver import EQ, LE, Constraint, ConstraintSystem, solve_system


class SolverCheckError(AssertionError):
    """A computed generator failed the constraints it was computed from."""


@dataclass(frozen=True)
class PairCone:
    n: int
    gens: TropMatrix

    def __post_init__(self):
        if self.gens.n != 2 * self.n:
            raise DimensionError(f"pair cone over n={self.n} needs {2 * self.n} rows, got {self.gens.n}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple], n: int | None = None) -> "PairCone":
        pairs = [(tuple(f), tuple(g)) for f, g in pairs]
        if n is None:
            if not pairs:
                raise DimensionError("dimension needed for an empty pair list")
            n = len(pairs[0][0])
        for f, g in pairs:
            if len(f) != n or len(g) != n:
                raise DimensionError(f"pair halves must have length {n}")
        return cls(n, TropMatrix(2 * n, tuple(f + g for f, g in pairs)))

    def pairs(self) -> Iterator[tuple]:
        for c in self.gens.cols:
            yield c[:self.n], c[self.n:]

    def __len__(self):
        return self.gens.p

    def to_text(self) -> str:
        return format_matrix(self.gens, header=f"# pair-cone n={self.n}")

    @classmethod
    def from_text(cls, text: str, source: str | None = None) -> "PairCone":
        gens = parse_matrix(text, source)
        n = pair_cone_dimension(text)
        if n is None:
            if gens.n % 2:
                raise ParseError(f"pair cone needs an even row count, got {gens.n}", source=source)
            n = gens.n // 2
        elif 2 * n != gens.n:
            raise ParseError(f"header says n={n} but the matrix has {gens.n} rows", source=source)
        return cls(n, gens)


def stack(f: Sequence[Scalar], g: Sequence[Scalar]) -> tuple:
    if len(f) != len(g):
        raise DimensionError(f"pair halves have lengths {len(f)} and {len(g)}")
    return tuple(f) + tuple(g)


def pair_in_polar(V: TropMatrix, f: Sequence[Scalar], g: Sequence[Scalar]) -> bool:
    if len(f) != V.n or len(g) != V.n:
        raise DimensionError(f"pair of lengths {len(f)}, {len(g)} against a cone in dimension {V.n}")
    return all(bracket(f, v) <= bracket(g, v) for v in V.cols)


def pair_in_orthogonal(V: TropMatrix, f: Sequence[Scalar], g: Sequence[Scalar]) -> bool:
    if len(f) != V.n or len(g) != V.n:
        raise DimensionError(f"pair of lengths {len(f)}, {len(g)} against a cone in dimension {V.n}")
    return all(bracket(f, v) == bracket(g, v) for v in V.cols)


def _pair_system(V: TropMatrix, rel: str) -> ConstraintSystem:
    n = V.n
    eps = eps_vector(n)
    rows = [Constraint(tuple(v) + eps, eps + tuple(v), rel) for v in V.cols]
    return ConstraintSystem(2 * n, tuple(rows))


def _checked(V: TropMatrix, G: TropMatrix, test) -> PairCone:
    n = V.n
    for c in G.cols:
        if not test(V, c[:n], c[n:]):
            raise SolverCheckError(f"generator {c} violates the defining constraints")
    return PairCone(n, G)


def polar_of_cone(V: TropMatrix) -> PairCone:
    """Generators of all pairs ``(f, g)`` with ``<f|v> <= <g|v>`` on ``span(V)``."""
    require_rmax(sum(V.cols, ()), "cone generators")
    return _checked(V, solve_system(_pair_system(V, LE)), pair_in_polar)


def orthogonal_of_cone(V: TropMatrix) -> PairCone:
    require_rmax(sum(V.cols, ()), "cone generators")
    return _checked(V, solve_system(_pair_system(V, EQ)), pair_in_orthogonal)


def _dual(W: PairCone, rel: str) -> TropMatrix:
    system = ConstraintSystem(W.n, tuple(Constraint(f, g, rel) for f, g in W.pairs()))
    return solve_system(system)


def dual_polar(W: PairCone) -> TropMatrix:
    """Generators of ``{x : <f|x> <= <g|x> for all (f, g) in W}``."""
    return _dual(W, LE)


def dual_top(W: PairCone) -> TropMatrix:
    """Generators of ``{x : <f|x> = <g|x> for all (f, g) in W}``."""
    return _dual(W, EQ)


def closure_polar(U: PairCone) -> PairCone:
    return polar_of_cone(dual_polar(U))


def closure_congruence(U: PairCone) -> PairCone:
    return orthogonal_of_cone(dual_top(U))


def is_closed_polar_cone(W: PairCone) -> bool:
    return cone_equal(W.gens, closure_polar(W).gens)


def is_closed_congruence(W: PairCone) -> bool:
    return cone_equal(W.gens, closure_congruence(W).gens)


def _max_rep(V: TropMatrix, t: Sequence[Scalar]) -> tuple:
    if len(t) != V.n:
        raise DimensionError(f"vector of length {len(t)} against a cone in dimension {V.n}")
    out = [TOP] * V.n
    for v in V.cols:
        level = bracket(t, v)
        for i, vi in enumerate(v):
            r = t_residual(vi, level)
            if r < out[i]:
                out[i] = r
    return tuple(out)


def max_rep_polar(V: TropMatrix, t: Sequence[Scalar]) -> tuple:
    """Supremum of all ``f`` with ``(f, t)`` in the polar of ``span(V)``.

    The constraints ``<f|v> <= <t|v>`` decouple over the coordinates of ``f``,
    so the supremum is ``min_v (<t|v> - v_i)`` coordinatewise; it may contain
    +inf entries.
    """
    return _max_rep(V, t)


def max_rep_congruence(V: TropMatrix, u: Sequence[Scalar]) -> tuple:
    """Maximal representative of the class of ``u`` modulo the orthogonal of ``span(V)``.

    With ``F(x)_k = <v_k|x>`` this is ``F#(F(u))``.  Any ``f`` with
    ``F(f) <= F(u)`` satisfies ``F(f + u) = F(u)``, so the supremum agrees with
    the polar one.
    """
    return _max_rep(V, u)


def inequality_to_equality(f: Sequence[Scalar], g: Sequence[Scalar]) -> tuple:
    """``<f|x> <= <g|x>`` holds iff ``<f (+) g|x> = <g|x>``."""
    return vec_max(f, g), tuple(g)


def is_pair_combination(pair: tuple, W: PairCone) -> bool:
    f, g = pair
    if len(f) != W.n or len(g) != W.n:
        raise DimensionError(f"pair of lengths {len(f)}, {len(g)} against n={W.n}")
    return member(stack(f, g), W.gens)


def equality_span_of_polar(W: PairCone, symmetric: bool = True) -> PairCone:
    """Pairs obtained by rewriting every generating inequality as an equality.

    An equality can be read in both directions, so by default both
    orientations ``(f + g, g)`` and ``(g, f + g)`` are included.
    """
    pairs = []
    for f, g in W.pairs():
        lhs, rhs = inequality_to_equality(f, g)
        pairs.append((lhs, rhs))
        if symmetric:
            pairs.append((rhs, lhs))
    return PairCone.from_pairs(pairs, W.n)
