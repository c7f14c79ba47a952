import itertools
import random

import pytest

from tropdual.linalg import TropMatrix
from tropdual.scalar import EPS

VALS = (EPS, -2, -1, 0, 1, 2)

# Acceptance results collected for the terminal summary.
ACCEPTANCE = {}


def random_vector(rng, n, values=VALS):
    return tuple(rng.choice(values) for _ in range(n))


def random_cone(rng, max_n=4, max_p=5, values=VALS):
    n = rng.randint(1, max_n)
    p = rng.randint(1, max_p)
    return TropMatrix(n, tuple(random_vector(rng, n, values) for _ in range(p)))


def brute_bracket(y, x):
    """max_i (y_i + x_i) written out without the library's helpers."""
    terms = [a + b for a, b in zip(y, x) if a != EPS and b != EPS]
    return max(terms) if terms else EPS


def brute_in_span(x, cols, coeffs=(EPS,) + tuple(range(-8, 9))):
    """Search every coefficient vector on a grid for a combination equal to x."""
    n = len(x)
    for lam in itertools.product(coeffs, repeat=len(cols)):
        out = [EPS] * n
        for c, l in zip(cols, lam):
            if l == EPS:
                continue
            for i in range(n):
                if c[i] != EPS:
                    out[i] = max(out[i], c[i] + l)
        if tuple(out) == tuple(x):
            return True
    return not cols and all(e == EPS for e in x)


def grid_points(n, values=VALS):
    return itertools.product(values, repeat=n)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, label = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key:>2}: {label}")
