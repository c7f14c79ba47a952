"""Constructive separation witnesses.

Every function returns ``None`` when there is nothing to separate (the point
is in the cone, the pair is in the polar or congruence) and a
:class:`Witness` otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .duality import max_rep_congruence, max_rep_polar, pair_in_orthogonal, pair_in_polar
from .formats import format_vector
from .linalg import (
    DimensionError, TropMatrix, bracket, has_top, member, project, require_rmax, vec_conj,
    vec_leq, vec_residual,
)
from .scalar import EPS, Scalar, format_scalar, is_finite

POINT = "point-halfspace"
POLAR = "polar-vector"
CONGRUENCE = "congruence-vector"
RESIDUAL = "complete-residual"
RESIDUAL_CONGRUENCE = "complete-residual-congruence"

DEFAULT_MAX_PERTURB = 64


class PerturbationExhausted(RuntimeError):
    """No finite ``h`` was accepted within the perturbation budget."""


@dataclass(frozen=True)
class Witness:
    """A separating object together with the evaluations certifying it.

    ``payload`` holds the separating vectors (``f``/``g``, ``y`` or ``x``),
    ``target`` the separated object (``x`` or ``s``/``t``).  For the
    inequality kinds ``lhs`` is not ``<= rhs``; for the equality kinds they
    differ.
    """

    kind: str
    payload: dict
    target: dict
    lhs: Scalar
    rhs: Scalar
    extra: dict = field(default_factory=dict)

    def evaluations(self) -> tuple:
        p, t = self.payload, self.target
        if self.kind == POINT:
            return bracket(p["f"], t["x"]), bracket(p["g"], t["x"])
        if self.kind in (POLAR, CONGRUENCE):
            return bracket(p["y"], t["s"]), bracket(p["y"], t["t"])
        if self.kind == RESIDUAL:
            return vec_residual(t["t"], p["x"]), vec_residual(t["s"], p["x"])
        if self.kind == RESIDUAL_CONGRUENCE:
            return vec_residual(t["s"], p["x"]), vec_residual(t["t"], p["x"])
        raise ValueError(f"unknown witness kind {self.kind!r}")

    def certifies(self) -> bool:
        """Recompute the evaluations and check they match and are violated."""
        lhs, rhs = self.evaluations()
        if (lhs, rhs) != (self.lhs, self.rhs):
            return False
        if self.kind in (CONGRUENCE, RESIDUAL_CONGRUENCE):
            return lhs != rhs
        return not lhs <= rhs

    def valid_for(self, V: TropMatrix) -> bool:
        """Check the witness against every generator of ``span(V)`` as well."""
        if not self.certifies():
            return False
        p = self.payload
        if self.kind == POINT:
            return all(bracket(p["f"], v) <= bracket(p["g"], v) for v in V.cols)
        if self.kind in (POLAR, CONGRUENCE):
            # y is valid for every pair of the polar (resp. orthogonal) iff y lies in span(V).
            return not has_top(p["y"]) and member(p["y"], V)
        return True

    def to_text(self) -> str:
        lines = [f"kind: {self.kind}"]
        for k, v in self.payload.items():
            lines.append(f"{k}: {format_vector(v)}")
        for k, v in self.target.items():
            lines.append(f"{k}: {format_vector(v)}")
        for k, v in self.extra.items():
            lines.append(f"{k}: {format_vector(v)}")
        lines.append(f"lhs: {format_scalar(self.lhs)}")
        lines.append(f"rhs: {format_scalar(self.rhs)}")
        return "\n".join(lines) + "\n"


def _dims(V: TropMatrix, *vs) -> None:
    for v in vs:
        if len(v) != V.n:
            raise DimensionError(f"vector of length {len(v)} against a cone in dimension {V.n}")


def separate_point(V: TropMatrix, x: Sequence[Scalar]) -> Witness | None:
    """Half-space ``<f|.> <= <g|.>`` containing ``span(V)`` but not ``x``.

    ``f = -P(x)`` and ``g = -x`` where ``P`` is the projection onto the cone;
    ``g`` has +inf entries wherever ``x`` has -inf ones.
    """
    _dims(V, x)
    x = tuple(x)
    require_rmax(x, "x")
    px = project(V, x)
    if px == x:
        return None
    f, g = vec_conj(px), vec_conj(x)
    return Witness(POINT, {"f": f, "g": g}, {"x": x}, bracket(f, x), bracket(g, x))


def separate_pair_polar_complete(V: TropMatrix, s: Sequence[Scalar],
                                 t: Sequence[Scalar]) -> Witness | None:
    """Residual witness ``x = max_rep(t)``: ``t\\x`` is not below ``s\\x``."""
    _dims(V, s, t)
    s, t = tuple(s), tuple(t)
    if pair_in_polar(V, s, t):
        return None
    x = max_rep_polar(V, t)
    return Witness(RESIDUAL, {"x": x}, {"s": s, "t": t},
                   vec_residual(t, x), vec_residual(s, x))


def separate_pair_congruence_complete(V: TropMatrix, s: Sequence[Scalar],
                                      t: Sequence[Scalar]) -> Witness | None:
    """Residual witness for the congruence: ``s\\x != t\\x``."""
    _dims(V, s, t)
    s, t = tuple(s), tuple(t)
    if pair_in_orthogonal(V, s, t):
        return None
    es, et = max_rep_congruence(V, s), max_rep_congruence(V, t)
    x = et if not vec_leq(es, et) else es
    return Witness(RESIDUAL_CONGRUENCE, {"x": x}, {"s": s, "t": t},
                   vec_residual(s, x), vec_residual(t, x))


def perturbation_schedule(V: TropMatrix, s: Sequence[Scalar], t: Sequence[Scalar],
                          max_perturb: int = DEFAULT_MAX_PERTURB):
    """Finite vectors ``h >= t`` decreasing towards ``t``.

    ``t`` itself comes first when it is finite.  Otherwise the -inf entries
    of ``t`` are replaced by ``M - k`` for ``k = 0..max_perturb`` where ``M``
    is the largest finite entry among ``s``, ``t`` and the generators.
    """
    if all(is_finite(e) for e in t):
        yield tuple(t)
        return
    finite = [e for e in (*s, *t, *(e for c in V.cols for e in c)) if is_finite(e)]
    top = max(finite) if finite else 0
    for k in range(max_perturb + 1):
        level = top - k
        yield tuple(level if e == EPS else e for e in t)


def _find_h(V, s, t, max_perturb):
    for h in perturbation_schedule(V, s, t, max_perturb):
        eh = max_rep_polar(V, h)
        if not vec_leq(s, eh):
            return h, eh
    raise PerturbationExhausted(
        f"no finite h >= t with s not below max_rep(h) after {max_perturb} steps")


def separate_pair_polar(V: TropMatrix, s: Sequence[Scalar], t: Sequence[Scalar],
                        max_perturb: int = DEFAULT_MAX_PERTURB) -> Witness | None:
    """Vector ``y`` in ``Rmax^n`` valid for the polar of ``span(V)`` with ``<y|s> > <y|t>``."""
    _dims(V, s, t)
    s, t = tuple(s), tuple(t)
    require_rmax(s, "s")
    require_rmax(t, "t")
    if pair_in_polar(V, s, t):
        return None
    h, eh = _find_h(V, s, t, max_perturb)
    y = vec_conj(eh)
    return Witness(POLAR, {"y": y}, {"s": s, "t": t}, bracket(y, s), bracket(y, t),
                   extra={"h": h, "max_rep_h": eh})


def separate_pair_congruence(V: TropMatrix, s: Sequence[Scalar], t: Sequence[Scalar],
                             max_perturb: int = DEFAULT_MAX_PERTURB) -> Witness | None:
    """Vector ``y`` in ``span(V)`` with ``<y|s> != <y|t>``.

    The ``s`` side is used when ``max_rep(s)`` is not below ``max_rep(t)``;
    otherwise the roles of ``s`` and ``t`` are swapped for the search.
    """
    _dims(V, s, t)
    s, t = tuple(s), tuple(t)
    require_rmax(s, "s")
    require_rmax(t, "t")
    if pair_in_orthogonal(V, s, t):
        return None
    es, et = max_rep_congruence(V, s), max_rep_congruence(V, t)
    if not vec_leq(es, et):
        h, eh = _find_h(V, s, t, max_perturb)
    else:
        h, eh = _find_h(V, t, s, max_perturb)
    y = vec_conj(eh)
    return Witness(CONGRUENCE, {"y": y}, {"s": s, "t": t}, bracket(y, s), bracket(y, t),
                   extra={"h": h, "max_rep_h": eh})
