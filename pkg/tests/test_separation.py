import pytest

from tropdual.duality import (
    max_rep_congruence, max_rep_polar, pair_in_orthogonal, pair_in_polar,
)
from tropdual.golden import load_matrix
from tropdual.linalg import DimensionError, DomainError, TropMatrix, member, vec_leq, vec_residual
from tropdual.scalar import EPS, TOP
from tropdual.separation import (
    CONGRUENCE, POINT, POLAR, RESIDUAL, RESIDUAL_CONGRUENCE, PerturbationExhausted,
    perturbation_schedule, separate_pair_congruence, separate_pair_congruence_complete,
    separate_pair_polar, separate_pair_polar_complete, separate_point,
)

from conftest import brute_bracket, grid_points, random_cone, random_vector

HALF = load_matrix("halfspace_cone.txt")
SEP = load_matrix("sep_cone.txt")
SEP4 = load_matrix("sep_cone_extra.txt")
S, T = (1, EPS, EPS), (EPS, 0, 2)


def test_separate_point_example():
    V = TropMatrix.from_columns([(0, 0, 0), (0, 2, 0)])
    w = separate_point(V, (0, 5, 0))
    assert w.kind == POINT
    assert w.payload == {"f": (0, -2, 0), "g": (0, -5, 0)}
    assert (w.lhs, w.rhs) == (3, 0)
    assert w.valid_for(V)


def test_separate_point_member_returns_none():
    assert separate_point(HALF, (3, 2, 4)) is None
    assert separate_point(HALF, (EPS, EPS, EPS)) is None


def test_separate_point_top_entries_in_g():
    w = separate_point(HALF, (0, EPS, EPS))
    assert w.payload["g"] == (0, TOP, TOP)
    assert w.valid_for(HALF)


def test_separate_point_rejects_top():
    with pytest.raises(DomainError):
        separate_point(HALF, (0, TOP, 0))
    with pytest.raises(DimensionError):
        separate_point(HALF, (0, 0))


def test_separate_pair_polar_three_generator_cone():
    assert not pair_in_polar(SEP, S, T)
    w = separate_pair_polar(SEP, S, T)
    assert w.kind == POLAR
    assert w.extra["max_rep_h"] == (0, 0, 2)
    assert w.payload["y"] == (0, 0, -2)
    assert (w.lhs, w.rhs) == (1, 0)
    assert w.valid_for(SEP)


def test_separate_pair_polar_perturbed():
    assert max_rep_polar(SEP4, T) == T
    w = separate_pair_polar(SEP4, S, T)
    assert w.extra["h"] == (0, 0, 2)
    assert w.valid_for(SEP4)


def test_separate_pair_polar_member_returns_none():
    assert separate_pair_polar(HALF, (2, EPS, EPS), (EPS, 0, 3)) is None


def test_perturbation_schedule():
    hs = list(perturbation_schedule(TropMatrix.from_columns([(0,)]), (2,), (EPS,), max_perturb=3))
    assert hs == [(2,), (1,), (0,), (-1,)]
    assert list(perturbation_schedule(SEP, S, (1, 2, 3))) == [(1, 2, 3)]


def test_perturbation_exhausted():
    V = TropMatrix.from_columns([(0,)])
    with pytest.raises(PerturbationExhausted):
        separate_pair_polar(V, (2,), (EPS,), max_perturb=0)
    w = separate_pair_polar(V, (2,), (EPS,), max_perturb=1)
    assert w.extra["h"] == (1,)
    assert w.valid_for(V)


def test_complete_residual_witness():
    w = separate_pair_polar_complete(SEP, S, T)
    assert w.kind == RESIDUAL
    assert w.payload["x"] == (0, 0, 2)
    assert (w.lhs, w.rhs) == (0, -1)
    assert w.certifies()
    assert vec_residual(T, w.payload["x"]) == 0
    assert separate_pair_polar_complete(HALF, (2, EPS, EPS), (EPS, 0, 3)) is None


def test_separate_pair_congruence():
    u, v = (0, 0, 0), (0, 1, 0)
    V = TropMatrix.from_columns([(0, 0, 0), (0, 2, 0)])
    assert not pair_in_orthogonal(V, u, v)
    w = separate_pair_congruence(V, u, v)
    assert w.kind == CONGRUENCE
    assert w.lhs != w.rhs and w.valid_for(V)
    c = separate_pair_congruence_complete(V, u, v)
    assert c.kind == RESIDUAL_CONGRUENCE and c.certifies()
    assert separate_pair_congruence(V, u, u) is None
    assert separate_pair_congruence_complete(V, (0, 2, 0), (0, 2, 0)) is None


def test_congruence_swaps_sides():
    # max_rep(s) <= max_rep(t) forces the search from the t side
    V = TropMatrix.identity(2)
    s, t = (0, EPS), (0, 1)
    assert vec_leq(max_rep_congruence(V, s), max_rep_congruence(V, t))
    w = separate_pair_congruence(V, s, t)
    assert w.valid_for(V)
    assert w.rhs > w.lhs


def test_witness_tampering_detected():
    w = separate_pair_polar(SEP, S, T)
    forged = type(w)(w.kind, {"y": (0, 0, 0)}, w.target, w.lhs, w.rhs)
    assert not forged.certifies()
    text = w.to_text()
    assert "kind: polar-vector" in text and "y: 0 0 -2" in text


def test_point_separation_soundness(rng):
    for _ in range(200):
        V = random_cone(rng)
        x = random_vector(rng, V.n)
        w = separate_point(V, x)
        if w is None:
            assert member(x, V)
            continue
        assert not member(x, V)
        assert w.valid_for(V)
        for z in grid_points(V.n, (EPS, -1, 0, 1)) if V.n <= 3 else ():
            if member(z, V):
                assert brute_bracket(w.payload["f"], z) <= brute_bracket(w.payload["g"], z)


def test_pair_separation_dichotomy(rng):
    for _ in range(300):
        V = random_cone(rng)
        s, t = random_vector(rng, V.n), random_vector(rng, V.n)
        inside = pair_in_polar(V, s, t)
        w = separate_pair_polar(V, s, t)
        c = separate_pair_polar_complete(V, s, t)
        assert (w is None) == (c is None) == inside
        if not inside:
            assert w.valid_for(V) and c.certifies()
            assert brute_bracket(w.payload["y"], s) > brute_bracket(w.payload["y"], t)
        eq = pair_in_orthogonal(V, s, t)
        we = separate_pair_congruence(V, s, t)
        ce = separate_pair_congruence_complete(V, s, t)
        assert (we is None) == (ce is None) == eq
        if not eq:
            assert we.valid_for(V) and ce.certifies()


def test_residual_characterisation(rng):
    # (s, t) is in the polar iff t\e(h) <= s\e(h) for every maximal representative e(h)
    for _ in range(100):
        V = random_cone(rng, max_n=3, max_p=3)
        s, t = random_vector(rng, V.n), random_vector(rng, V.n)
        hs = [t] + [random_vector(rng, V.n) for _ in range(10)]
        ok = all(vec_residual(t, max_rep_polar(V, h)) <= vec_residual(s, max_rep_polar(V, h))
                 for h in hs)
        assert ok == pair_in_polar(V, s, t)


def test_separate_point_halfspace_cone():
    w = separate_point(HALF, (0, 5, 0))
    assert w.payload == {"f": (0, -2, 0), "g": (0, -5, 0)}
    assert (w.lhs, w.rhs) == (3, 0)
    levels = [(brute_bracket(w.payload["f"], v), brute_bracket(w.payload["g"], v)) for v in HALF.cols]
    assert levels == [(2, 2), (1, 1), (2, 2)]


def test_congruence_three_generator_cone():
    w = separate_pair_congruence(SEP, S, T)
    assert w.payload["y"] == (0, 0, -2)
    assert (w.lhs, w.rhs) == (1, 0)
    assert member(w.payload["y"], SEP)
    c = separate_pair_congruence_complete(SEP, S, T)
    assert c.payload["x"] == (0, 0, 2)
    assert (c.lhs, c.rhs) == (-1, 0)


def test_identity_congruence_is_injective():
    V = TropMatrix.identity(2)
    for s in grid_points(2, (EPS, 0, 1)):
        for t in grid_points(2, (EPS, 0, 1)):
            w = separate_pair_congruence_complete(V, s, t)
            assert (w is None) == (s == t)
