"""2D pictures of 3D max-plus cones.

Finite vectors are projected orthogonally onto the plane normal to
``(1, 1, 1)``, so max-plus proportional vectors land on the same point.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import DimensionError, TropMatrix, vec_combine
from .scalar import EPS, is_finite

_U1 = (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0)
_U2 = (1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6))


def project_point(x) -> tuple[float, float]:
    xs = [float(e) for e in x]
    return (sum(a * b for a, b in zip(_U1, xs)), sum(a * b for a, b in zip(_U2, xs)))


@dataclass
class PlotData:
    generators: list = field(default_factory=list)   # (label, u, v)
    points: list = field(default_factory=list)       # (u, v)
    warnings: list = field(default_factory=list)

    def to_csv(self) -> str:
        lines = ["label,u,v"]
        for label, u, v in self.generators:
            lines.append(f"{label},{u:.12g},{v:.12g}")
        for u, v in self.points:
            lines.append(f"sample,{u:.12g},{v:.12g}")
        return "\n".join(lines) + "\n"

    def to_svg(self, size: int = 400) -> str:
        pts = [(u, v) for _, u, v in self.generators] + list(self.points)
        if not pts:
            return f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}"/>\n'
        us, vs = [p[0] for p in pts], [p[1] for p in pts]
        lo_u, lo_v = min(us), min(vs)
        span = max(max(us) - lo_u, max(vs) - lo_v) or 1.0
        pad = 20

        def xy(u, v):
            return (pad + (u - lo_u) / span * (size - 2 * pad),
                    size - pad - (v - lo_v) / span * (size - 2 * pad))

        out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">']
        for u, v in self.points:
            x, y = xy(u, v)
            out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="1.5" fill="#999"/>')
        for label, u, v in self.generators:
            x, y = xy(u, v)
            out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="#000"/>')
            out.append(f'<text x="{x + 4:.2f}" y="{y - 4:.2f}" font-size="12">{label}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


def plot_projection(V: TropMatrix, samples: int = 500, seed: int = 0,
                    coeff_range: int = 4, resolution: int = 8) -> PlotData:
    """Sample random members of ``span(V)`` and project them to the plane.

    Coefficients are rationals in ``[-coeff_range, coeff_range]`` with step
    ``1/resolution``; each one is -inf with probability 1/3 so that faces
    of the cone are sampled too.  Members with -inf entries are skipped.
    """
    if V.n != 3:
        raise DimensionError(f"plot needs a cone in dimension 3, got {V.n}")
    data = PlotData()
    if not V.cols:
        data.warnings.append("trivial cone: nothing to plot")
        return data
    for k, c in enumerate(V.cols, start=1):
        if all(is_finite(e) for e in c):
            data.generators.append((f"g{k}", *project_point(c)))
        else:
            data.warnings.append(f"generator g{k} has -inf entries and is not drawn")
    rng = random.Random(seed)
    lim = coeff_range * resolution
    for _ in range(samples):
        coeffs = [EPS if rng.random() < 1 / 3 else Fraction(rng.randint(-lim, lim), resolution)
                  for _ in V.cols]
        if all(c == EPS for c in coeffs):
            coeffs[rng.randrange(len(coeffs))] = 0
        x = vec_combine(V.cols, coeffs, 3)
        if all(is_finite(e) for e in x):
            data.points.append(project_point(x))
    if not data.points:
        data.warnings.append("no finite members sampled")
    return data
