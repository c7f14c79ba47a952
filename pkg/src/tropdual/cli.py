"""Command-line front end: ``tropdual <verb> [files] [flags]``.

Exit status is 0 on success, 1 when ``verify-paper`` (or ``solve --grid``)
finds a failing check, and 2 on input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import duality, oracle, separation, solver
from .duality import PairCone
from .formats import ParseError, format_matrix, format_vector, parse_matrix, parse_system, parse_vector
from .linalg import DimensionError, DomainError, member, project
from .plot import plot_projection
from .scalar import TOP

VERBS = ("polar", "orthogonal", "dual", "dual-eq", "closure", "check-bipolar", "member",
         "project", "separate-point", "separate-pair", "separate-pair-eq", "solve",
         "farkas-gap", "plot", "verify-paper")


class CliError(Exception):
    pass


def _read(path: str) -> str:
    p = Path(path)
    if not p.exists():
        raise CliError(f"{path}: file not found")
    return p.read_text()


def _matrix(path):
    return parse_matrix(_read(path), path)


def _pairs(path):
    return PairCone.from_text(_read(path), path)


def _vector(arg: str):
    """A vector file, or an inline row of tokens such as ``'1 . .'``."""
    if Path(arg).is_file():
        return parse_vector(Path(arg).read_text(), arg)
    try:
        return parse_vector(arg.replace(",", " "), "<argument>")
    except ParseError:
        if any(ch.isspace() for ch in arg.strip()) or "," in arg:
            raise
        raise CliError(f"{arg}: file not found") from None


def _witness(w, none_msg: str) -> str:
    return none_msg + "\n" if w is None else w.to_text()


def cmd_polar(a):
    return duality.polar_of_cone(_matrix(a.cone)).to_text()


def cmd_orthogonal(a):
    return duality.orthogonal_of_cone(_matrix(a.cone)).to_text()


def cmd_dual(a):
    return format_matrix(duality.dual_polar(_pairs(a.pairs)))


def cmd_dual_eq(a):
    return format_matrix(duality.dual_top(_pairs(a.pairs)))


def cmd_closure(a):
    W = _pairs(a.pairs)
    closed = duality.closure_congruence(W) if a.congruence else duality.closure_polar(W)
    return closed.to_text()


def cmd_check_bipolar(a):
    W = _pairs(a.pairs)
    if a.congruence:
        ok = duality.is_closed_congruence(W)
        what = "closed congruence"
    else:
        ok = duality.is_closed_polar_cone(W)
        what = "closed polar cone"
    return f"{what}\n" if ok else f"not a {what}\n"


def cmd_member(a):
    return "member\n" if member(_vector(a.vector), _matrix(a.cone)) else "not member\n"


def cmd_project(a):
    return format_vector(project(_matrix(a.cone), _vector(a.vector))) + "\n"


def cmd_separate_point(a):
    w = separation.separate_point(_matrix(a.cone), _vector(a.vector))
    text = _witness(w, "member")
    if w is not None and TOP in w.payload["g"]:
        text = "# note: g has +inf entries (x has -inf entries); use separate-pair for a finite witness\n" + text
    return text


def cmd_separate_pair(a):
    V, s, t = _matrix(a.cone), _vector(a.s), _vector(a.t)
    if a.complete:
        w = separation.separate_pair_polar_complete(V, s, t)
    else:
        w = separation.separate_pair_polar(V, s, t, max_perturb=a.max_perturb)
    return _witness(w, "in-polar")


def cmd_separate_pair_eq(a):
    V, s, t = _matrix(a.cone), _vector(a.s), _vector(a.t)
    if a.complete:
        w = separation.separate_pair_congruence_complete(V, s, t)
    else:
        w = separation.separate_pair_congruence(V, s, t, max_perturb=a.max_perturb)
    return _witness(w, "in-congruence")


def cmd_solve(a):
    system = parse_system(_read(a.system), a.system)
    G = solver.solve_system(system)
    text = format_matrix(G)
    if a.grid:
        grid = oracle.grid_from_spec(system.n, a.grid)
        sols = oracle.grid_solutions(system, grid)
        missing = [x for x in sols if not member(x, G)]
        text += f"# grid check: {len(sols)} grid solutions, {len(missing)} outside the span\n"
        if missing:
            return text, 1
    return text


def cmd_farkas_gap(a):
    return oracle.farkas_gap_demo(_matrix(a.cone)).to_text()


def cmd_plot(a):
    data = plot_projection(_matrix(a.cone), samples=a.samples, seed=a.seed)
    for msg in data.warnings:
        print(f"warning: {msg}", file=sys.stderr)
    return data.to_svg() if a.format == "svg" else data.to_csv()


def cmd_verify_paper(a):
    from .golden import run_checks

    grid = oracle.grid_from_spec(3, a.grid) if a.grid else None
    lines, failed = [], 0
    for check, ok in run_checks(grid):
        failed += not ok
        lines.append(f"{'PASS' if ok else 'FAIL'}  [{check.example}] {check.name}")
    lines.append(f"{len(lines) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n", 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid", help="oracle grid lo:hi:step (always includes -inf and 0)")
    common.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    common.add_argument("--max-perturb", type=int, default=separation.DEFAULT_MAX_PERTURB,
                        help="perturbation steps for finite witnesses (default %(default)s)")
    common.add_argument("--format", choices=("csv", "svg", "txt"), default=None)
    common.add_argument("-o", "--output", help="write the result to a file instead of stdout")

    p = argparse.ArgumentParser(prog="tropdual", description="Max-plus polars, orthogonals and separation.")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_, *args):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for arg in args:
            sp.add_argument(arg)
        sp.set_defaults(fn=fn)
        return sp

    verb("polar", cmd_polar, "generators of the polar of a cone", "cone")
    verb("orthogonal", cmd_orthogonal, "generators of the orthogonal of a cone", "cone")
    verb("dual", cmd_dual, "cone of points satisfying a set of inequalities", "pairs")
    verb("dual-eq", cmd_dual_eq, "cone of points satisfying a set of equalities", "pairs")
    sp = verb("closure", cmd_closure, "smallest closed polar cone (or congruence) containing pairs", "pairs")
    sp.add_argument("--congruence", action="store_true")
    sp = verb("check-bipolar", cmd_check_bipolar, "test whether pairs form a closed polar cone", "pairs")
    sp.add_argument("--congruence", action="store_true")
    verb("member", cmd_member, "test membership of a vector in a cone", "cone", "vector")
    verb("project", cmd_project, "greatest cone element below a vector", "cone", "vector")
    verb("separate-point", cmd_separate_point, "half-space separating a point from a cone", "cone", "vector")
    sp = verb("separate-pair", cmd_separate_pair, "separate an inequality from the polar", "cone", "s", "t")
    sp.add_argument("--complete", action="store_true", help="residual witness over the completed semiring")
    sp = verb("separate-pair-eq", cmd_separate_pair_eq, "separate an equality from the orthogonal",
              "cone", "s", "t")
    sp.add_argument("--complete", action="store_true", help="residual witness over the completed semiring")
    verb("solve", cmd_solve, "generators of a two-sided system's solution cone", "system")
    verb("farkas-gap", cmd_farkas_gap, "valid equalities not obtainable from inequalities", "cone")
    sp = verb("plot", cmd_plot, "2D projection of a 3D cone (csv or svg)", "cone")
    sp.add_argument("--samples", type=int, default=500)
    verb("verify-paper", cmd_verify_paper, "run the bundled worked examples")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.fn(args)
    except (CliError, ParseError, DimensionError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except separation.PerturbationExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text, status = result if isinstance(result, tuple) else (result, 0)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
