"""Max-plus scalars.

Finite values are exact rationals (``int`` or ``fractions.Fraction``).  The
zero of the semiring is ``EPS = -inf`` and the top element of the completed
semiring is ``TOP = +inf``; both are plain floats so that the natural order
``EPS < q < TOP`` is just Python's numeric order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Union

EPS = -math.inf
TOP = math.inf
UNIT = 0

Scalar = Union[int, Fraction, float]

EPS_TOKENS = ("-inf", ".")
TOP_TOKENS = ("+inf",)


class TokenError(ValueError):
    """A scalar token that cannot be parsed."""


def scalar(value) -> Scalar:
    """Coerce ``value`` to a canonical scalar.

    Integral rationals become ``int``; other rationals stay ``Fraction``.
    Finite floats are rejected since they would break exact comparisons.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a max-plus scalar")
    if isinstance(value, float):
        if value == EPS or value == TOP:
            return value
        raise TypeError(f"finite float {value!r} is not exact; use int or Fraction")
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        value = Fraction(value)
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot interpret {value!r} as a max-plus scalar")


def is_finite(a: Scalar) -> bool:
    return a != EPS and a != TOP


def t_add(a: Scalar, b: Scalar) -> Scalar:
    return a if a >= b else b


def t_mul(a: Scalar, b: Scalar) -> Scalar:
    # EPS absorbs TOP: x * eps = eps in a complete semiring.
    if a == EPS or b == EPS:
        return EPS
    return a + b


def t_residual(a: Scalar, b: Scalar) -> Scalar:
    """Largest ``nu`` with ``a * nu <= b`` (result may be ``TOP``)."""
    if a == EPS:
        return TOP
    if a == TOP:
        return TOP if b == TOP else EPS
    if b == EPS or b == TOP:
        return b
    return b - a


def t_conj(a: Scalar) -> Scalar:
    """Conjugate ``a \\ 0``; for the completed max-plus semiring this is ``-a``."""
    return -a


def parse_scalar(token: str) -> Scalar:
    tok = token.strip()
    if tok in EPS_TOKENS:
        return EPS
    if tok in TOP_TOKENS:
        return TOP
    try:
        value = Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise TokenError(f"invalid scalar token {token!r}") from None
    return value.numerator if value.denominator == 1 else value


def format_scalar(a: Scalar) -> str:
    if a == EPS:
        return "-inf"
    if a == TOP:
        return "+inf"
    a = Fraction(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"
