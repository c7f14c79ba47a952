"""Vectors, matrices and finitely generated cones over the max-plus semiring.

Vectors are plain tuples of scalars.  A :class:`TropMatrix` is stored by
columns because a cone is always the column span of its generator matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .scalar import EPS, TOP, Scalar, is_finite, scalar, t_conj, t_residual

Vector = tuple


class DimensionError(ValueError):
    pass


class DomainError(ValueError):
    """A vector with +inf entries was given to an operation over Rmax."""


def vector(entries: Iterable) -> Vector:
    v = tuple(scalar(e) for e in entries)
    if not v:
        raise DimensionError("vectors must have at least one entry")
    return v


def eps_vector(n: int) -> Vector:
    return (EPS,) * n


def top_vector(n: int) -> Vector:
    return (TOP,) * n


def unit_vector(n: int, i: int, value: Scalar = 0) -> Vector:
    v = [EPS] * n
    v[i] = value
    return tuple(v)


def has_top(x: Sequence[Scalar]) -> bool:
    return any(e == TOP for e in x)


def require_rmax(x: Sequence[Scalar], name: str = "vector") -> None:
    if has_top(x):
        raise DomainError(f"{name} has +inf entries but must lie in Rmax^n")


def _check_same(n: int, m: int, what: str) -> None:
    if n != m:
        raise DimensionError(f"{what}: dimension {n} != {m}")


@dataclass(frozen=True)
class TropMatrix:
    """An ``n x p`` matrix kept as a tuple of ``p`` columns of length ``n``.

    ``p == 0`` is allowed and spans the trivial cone ``{eps}``.
    """

    n: int
    cols: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError("matrices need at least one row")
        cols = tuple(tuple(c) for c in self.cols)
        for c in cols:
            if len(c) != self.n:
                raise DimensionError(f"column of length {len(c)} in a {self.n}-row matrix")
        object.__setattr__(self, "cols", cols)

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable], n: int | None = None) -> "TropMatrix":
        cols = tuple(vector(c) for c in columns)
        if n is None:
            if not cols:
                raise DimensionError("row count needed for an empty generator list")
            n = len(cols[0])
        return cls(n, cols)

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable], p: int | None = None) -> "TropMatrix":
        rows = [vector(r) if len(r) else () for r in (tuple(r) for r in rows)]
        if not rows:
            raise DimensionError("matrices need at least one row")
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise DimensionError(f"ragged rows: widths {sorted(widths)}")
        width = widths.pop()
        if p is not None:
            _check_same(width, p, "row width")
        return cls(len(rows), tuple(zip(*rows)) if width else ())

    @classmethod
    def identity(cls, n: int) -> "TropMatrix":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    @property
    def p(self) -> int:
        return len(self.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n, self.p

    def rows(self) -> list[Vector]:
        return [tuple(c[i] for c in self.cols) for i in range(self.n)]

    def has_top(self) -> bool:
        return any(has_top(c) for c in self.cols)

    def hstack(self, other: "TropMatrix") -> "TropMatrix":
        _check_same(self.n, other.n, "hstack")
        return TropMatrix(self.n, self.cols + other.cols)

    def __iter__(self):
        return iter(self.cols)

    def __len__(self):
        return len(self.cols)


def vec_combine(vectors: Sequence[Sequence[Scalar]], coeffs: Sequence[Scalar],
                n: int | None = None) -> Vector:
    """Max-plus linear combination ``(+)_k vectors[k] * coeffs[k]``."""
    _check_same(len(vectors), len(coeffs), "vec_combine")
    if n is None:
        if not vectors:
            raise DimensionError("dimension needed for an empty combination")
        n = len(vectors[0])
    out = [EPS] * n
    for v, lam in zip(vectors, coeffs):
        _check_same(len(v), n, "vec_combine")
        if lam == EPS:
            continue
        for i, vi in enumerate(v):
            if vi == EPS:
                continue
            s = vi + lam
            if s > out[i]:
                out[i] = s
    return tuple(out)


def mat_vec(A: TropMatrix, x: Sequence[Scalar]) -> Vector:
    _check_same(A.p, len(x), "mat_vec")
    return vec_combine(A.cols, x, A.n)


def bracket(y: Sequence[Scalar], x: Sequence[Scalar]) -> Scalar:
    """The pairing ``<y|x> = max_i (y_i + x_i)``."""
    _check_same(len(y), len(x), "bracket")
    best = EPS
    for a, b in zip(y, x):
        if a == EPS or b == EPS:
            continue
        s = a + b
        if s > best:
            best = s
    return best


def vec_residual(u: Sequence[Scalar], x: Sequence[Scalar]) -> Scalar:
    """``u \\ x``: the largest scalar ``lam`` with ``u * lam <= x``."""
    _check_same(len(u), len(x), "vec_residual")
    best = TOP
    for a, b in zip(u, x):
        r = t_residual(a, b)
        if r < best:
            best = r
            if best == EPS:
                break
    return best


def mat_residual(A: TropMatrix, x: Sequence[Scalar]) -> Vector:
    _check_same(A.n, len(x), "mat_residual")
    return tuple(vec_residual(c, x) for c in A.cols)


def project(A: TropMatrix, x: Sequence[Scalar]) -> Vector:
    """Greatest element of ``span(A)`` below ``x``, i.e. ``A (A \\ x)``."""
    _check_same(A.n, len(x), "project")
    return vec_combine(A.cols, mat_residual(A, x), A.n)


def in_span(x: Sequence[Scalar], cols: Sequence[Sequence[Scalar]]) -> bool:
    """Membership of an Rmax vector in the span of Rmax columns.

    ``x`` is in the span iff every finite ``x_i`` is attained by some column
    scaled by its residual, which is what ``project(A, x) == x`` checks.
    """
    need = {i for i, e in enumerate(x) if e != EPS}
    if not need:
        return True
    for c in cols:
        r = TOP
        for ci, xi in zip(c, x):
            if ci == EPS:
                continue
            if xi == EPS:
                r = EPS
                break
            d = xi - ci
            if d < r:
                r = d
        if r == EPS or r == TOP:
            continue
        need = {i for i in need if c[i] == EPS or c[i] + r != x[i]}
        if not need:
            return True
    return False


def member(x: Sequence[Scalar], A: TropMatrix) -> bool:
    _check_same(A.n, len(x), "member")
    if has_top(x) or A.has_top():
        return project(A, x) == tuple(x)
    return in_span(x, A.cols)


def cone_equal(A: TropMatrix, B: TropMatrix) -> bool:
    _check_same(A.n, B.n, "cone_equal")
    return all(member(c, B) for c in A.cols) and all(member(c, A) for c in B.cols)


def cone_contains(A: TropMatrix, B: TropMatrix) -> bool:
    """True when ``span(B)`` is contained in ``span(A)``."""
    _check_same(A.n, B.n, "cone_contains")
    return all(member(c, A) for c in B.cols)


def perturb_top(z: Sequence[Scalar], beta: Scalar) -> Vector:
    """Replace every +inf entry of ``z`` by ``beta``."""
    if beta == TOP:
        raise DomainError("beta must be finite or -inf")
    return tuple(beta if e == TOP else e for e in z)


def vec_conj(x: Sequence[Scalar]) -> Vector:
    return tuple(t_conj(e) for e in x)


def vec_leq(x: Sequence[Scalar], y: Sequence[Scalar]) -> bool:
    _check_same(len(x), len(y), "vec_leq")
    return all(a <= b for a, b in zip(x, y))


def vec_max(x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    _check_same(len(x), len(y), "vec_max")
    return tuple(a if a >= b else b for a, b in zip(x, y))


def scale(x: Sequence[Scalar], lam: Scalar) -> Vector:
    if lam == EPS:
        return eps_vector(len(x))
    return tuple(EPS if e == EPS else e + lam for e in x)


def normalize(x: Sequence[Scalar]) -> Vector:
    """Representative of the ray of ``x`` whose first finite entry is 0."""
    for e in x:
        if is_finite(e):
            return scale(x, -e)
    return tuple(x)
