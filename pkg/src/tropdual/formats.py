"""Text formats for scalars, vectors, matrices, pair cones and constraint systems.

Matrix files::

    n p
    a11 a12 ... a1p
    ...
    an1 an2 ... anp

Columns are the generators.  ``-inf`` or ``.`` stands for the zero element,
``+inf`` for the top element, finite entries are integers, decimals or
``p/q``.  Lines starting with ``#`` are comments, except that a pair-cone
file may carry the header ``# pair-cone n=<n>``.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Sequence

from .scalar import Scalar, TokenError, format_scalar, parse_scalar
from .linalg import TropMatrix

_PAIR_HEADER = re.compile(r"#\s*pair-cone\s+n\s*=\s*(\d+)\s*$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 source: str | None = None):
        self.line = line
        self.column = column
        self.source = source
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            if source:
                where = f"{source}: {where}"
            where += ": "
        super().__init__(where + message)


def _lines(text: str):
    """Yield ``(lineno, [(column, token), ...])`` for every content line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", raw)]
        yield lineno, toks


def _scalars(toks, lineno, source) -> list[Scalar]:
    out = []
    for col, tok in toks:
        try:
            out.append(parse_scalar(tok))
        except TokenError as exc:
            raise ParseError(str(exc), lineno, col, source) from None
    return out


def _header(toks, lineno, source, names) -> list[int]:
    if len(toks) != len(names):
        raise ParseError(f"expected header '{' '.join(names)}'", lineno, 1, source)
    vals = []
    for (col, tok), name in zip(toks, names):
        if not tok.isdigit():
            raise ParseError(f"header field {name} must be a non-negative integer, got {tok!r}",
                             lineno, col, source)
        vals.append(int(tok))
    return vals


def format_vector(x: Sequence[Scalar]) -> str:
    return " ".join(format_scalar(e) for e in x)


def parse_vector(text: str, source: str | None = None) -> tuple:
    rows = list(_lines(text))
    if len(rows) != 1:
        raise ParseError(f"expected exactly one row of scalars, found {len(rows)}",
                         rows[1][0] if len(rows) > 1 else None, None, source)
    lineno, toks = rows[0]
    return tuple(_scalars(toks, lineno, source))


def format_matrix(A: TropMatrix, header: str | None = None) -> str:
    out = []
    if header:
        out.append(header)
    out.append(f"{A.n} {A.p}")
    for row in A.rows():
        out.append(format_vector(row))
    return "\n".join(out) + "\n"


def parse_matrix(text: str, source: str | None = None) -> TropMatrix:
    it = iter(_lines(text))
    try:
        lineno, toks = next(it)
    except StopIteration:
        raise ParseError("empty matrix file", source=source) from None
    n, p = _header(toks, lineno, source, ("n", "p"))
    if n < 1:
        raise ParseError("matrix needs n >= 1 rows", lineno, 1, source)
    rows = []
    for lineno, toks in it:
        if len(rows) == n:
            raise ParseError(f"extra row beyond the declared {n}", lineno, 1, source)
        if len(toks) != p:
            raise ParseError(f"expected {p} entries, found {len(toks)}", lineno,
                             toks[min(p, len(toks) - 1)][0] if toks else 1, source)
        rows.append(_scalars(toks, lineno, source))
    if p == 0:
        return TropMatrix(n, ())
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, found {len(rows)}", source=source)
    return TropMatrix(n, tuple(zip(*rows)))


def pair_cone_dimension(text: str) -> int | None:
    for raw in text.splitlines():
        m = _PAIR_HEADER.match(raw.strip())
        if m:
            return int(m.group(1))
    return None


def format_system(system) -> str:
    out = [f"{system.n} {len(system.rows)}"]
    for row in system.rows:
        out.append(f"{row.rel} {format_vector(row.a)} {format_vector(row.b)}")
    return "\n".join(out) + "\n"


def parse_system(text: str, source: str | None = None):
    from .solver import ConstraintSystem, Constraint

    it = iter(_lines(text))
    try:
        lineno, toks = next(it)
    except StopIteration:
        raise ParseError("empty system file", source=source) from None
    n, m = _header(toks, lineno, source, ("n", "m"))
    rows = []
    for lineno, toks in it:
        if len(rows) == m:
            raise ParseError(f"extra constraint beyond the declared {m}", lineno, 1, source)
        rel = toks[0][1].upper()
        if rel not in ("LE", "EQ"):
            raise ParseError(f"relation must be LE or EQ, got {toks[0][1]!r}", lineno,
                             toks[0][0], source)
        if len(toks) != 1 + 2 * n:
            raise ParseError(f"expected {2 * n} scalars after {rel}, found {len(toks) - 1}",
                             lineno, toks[-1][0], source)
        vals = _scalars(toks[1:], lineno, source)
        rows.append(Constraint(tuple(vals[:n]), tuple(vals[n:]), rel))
    if len(rows) != m:
        raise ParseError(f"expected {m} constraints, found {len(rows)}", source=source)
    return ConstraintSystem(n, tuple(rows))


def read_text(path) -> str:
    return Path(path).read_text()
