"""Bundled worked examples and the exact checks run by ``tropdual verify-paper``."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .duality import (
    PairCone, dual_polar, dual_top, equality_span_of_polar, is_closed_congruence,
    is_closed_polar_cone, is_pair_combination, max_rep_polar, orthogonal_of_cone,
    pair_in_orthogonal, pair_in_polar, polar_of_cone,
)
from .formats import parse_matrix, parse_vector
from .linalg import TropMatrix, bracket, cone_equal, member, normalize, vec_combine
from .oracle import Grid, check_max_rep, farkas_gap_demo
from .scalar import EPS
from .separation import separate_pair_congruence, separate_pair_polar


def _text(name: str) -> str:
    return resources.files("tropdual").joinpath("data").joinpath(name).read_text()


def load_matrix(name: str) -> TropMatrix:
    return parse_matrix(_text(name), name)


def load_pairs(name: str) -> PairCone:
    return PairCone.from_text(_text(name), name)


def load_vector(name: str) -> tuple:
    return parse_vector(_text(name), name)


@dataclass(frozen=True)
class Check:
    example: str
    name: str
    run: Callable[[], bool]


def _same_equality(p, q) -> bool:
    a, b = p[0] + p[1], q[0] + q[1]
    c = q[1] + q[0]
    return normalize(a) in (normalize(b), normalize(c))


def checks(grid: Grid | None = None) -> list[Check]:
    out: list[Check] = []

    def add(example, name):
        def deco(fn):
            out.append(Check(example, name, fn))
            return fn
        return deco

    # half-space description of a cone with generators (1,0,2), (1,1,0), (2,4,0)
    hv = load_matrix("halfspace_cone.txt")
    hw = load_pairs("halfspace_pairs.txt")
    f2, g2 = (2, EPS, EPS), (EPS, 0, 3)

    @add("halfspaces", "2x1 <= x2 + 3x3 is valid on the cone")
    def _():
        return pair_in_polar(hv, f2, g2)

    @add("halfspaces", "all eight inequalities are valid")
    def _():
        return all(pair_in_polar(hv, f, g) for f, g in hw.pairs())

    @add("halfspaces", "the eight half-spaces intersect to the cone")
    def _():
        return cone_equal(dual_polar(hw), hv)

    @add("halfspaces", "computed polar contains ((2,e,e),(e,0,3))")
    def _():
        return is_pair_combination((f2, g2), polar_of_cone(hv))

    # residual separation for the cone (2,0,3), (2,1,0), (2,4,0)
    sv = load_matrix("sep_cone.txt")
    sx = load_matrix("sep_cone_extra.txt")
    s, t = load_vector("sep_s.txt"), load_vector("sep_t.txt")

    @add("separation", "(s,t) is not in the polar (violated at b)")
    def _():
        return not pair_in_polar(sv, s, t) and bracket(s, sv.cols[1]) > bracket(t, sv.cols[1])

    @add("separation", "max representative of t is (0,0,2)")
    def _():
        return max_rep_polar(sv, t) == (0, 0, 2)

    @add("separation", "(0,0,-2) = (-2)b + (-4)c lies in the cone")
    def _():
        y = vec_combine([sv.cols[1], sv.cols[2]], [-2, -4])
        return y == (0, 0, -2) and member(y, sv)

    @add("separation", "polar witness y = (0,0,-2) with <y|s> = 1 > 0 = <y|t>")
    def _():
        w = separate_pair_polar(sv, s, t)
        return (w is not None and w.payload["y"] == (0, 0, -2)
                and (w.lhs, w.rhs) == (1, 0) and w.valid_for(sv))

    @add("separation", "congruence witness y = (0,0,-2)")
    def _():
        w = separate_pair_congruence(sv, s, t)
        return w is not None and w.payload["y"] == (0, 0, -2) and w.valid_for(sv)

    @add("separation", "max representative passes the grid oracle")
    def _():
        return check_max_rep(sv, t, (0, 0, 2), grid or Grid(3))

    # the same cone with the extra generator (0,e,e): the max representative is t itself
    @add("perturbation", "max representative of t is t = (e,0,2)")
    def _():
        return max_rep_polar(sx, t) == t

    @add("perturbation", "perturbed polar witness separates")
    def _():
        w = separate_pair_polar(sx, s, t)
        return w is not None and w.valid_for(sx) and w.lhs > w.rhs

    @add("perturbation", "max representative passes the grid oracle")
    def _():
        return check_max_rep(sx, t, t, grid or Grid(3))

    # valid inequalities and equalities for the cone (0,0,0), (0,1,-1), (0,2,-2)
    gv = load_matrix("gap_cone.txt")
    gp = load_pairs("gap_polar.txt")
    go = load_pairs("gap_orthogonal.txt")
    eq_pair = ((EPS, 0, 3), (2, EPS, 3))

    @add("valid-equalities", "polar equals the published 14 generators")
    def _():
        return cone_equal(polar_of_cone(gv).gens, gp.gens)

    @add("valid-equalities", "orthogonal equals the published 19 generators")
    def _():
        return cone_equal(orthogonal_of_cone(gv).gens, go.gens)

    @add("valid-equalities", "1x1 <= x2 + 1x3 is valid")
    def _():
        return pair_in_polar(gv, (1, EPS, EPS), (EPS, 0, 1))

    @add("valid-equalities", "x2 + 3x3 = 2x1 + 3x3 is valid")
    def _():
        return pair_in_orthogonal(gv, *eq_pair)

    @add("valid-equalities", "x2 + 3x3 = 2x1 + 3x3 is not a combination of rewritten inequalities")
    def _():
        span = equality_span_of_polar(polar_of_cone(gv))
        return not is_pair_combination(eq_pair, span) and not is_pair_combination(eq_pair[::-1], span)

    @add("valid-equalities", "gap report lists x2 + 3x3 = 2x1 + 3x3")
    def _():
        return any(_same_equality(p, eq_pair) for p in farkas_gap_demo(gv).gap)

    @add("valid-equalities", "dual of the polar and of the orthogonal give back the cone")
    def _():
        return cone_equal(dual_polar(gp), gv) and cone_equal(dual_top(go), gv)

    @add("valid-equalities", "polar and orthogonal are closed")
    def _():
        return is_closed_polar_cone(gp) and is_closed_congruence(go)

    return out


def run_checks(grid: Grid | None = None) -> list[tuple[Check, bool]]:
    results = []
    for c in checks(grid):
        try:
            ok = bool(c.run())
        except Exception:  # a crash is a failed check, reported like any other
            ok = False
        results.append((c, ok))
    return results
