"""Euclidean norm, polar form, principal nth roots, and complex literals.

Everything works on Python's built-in complex type.  All functions are pure
and total on finite inputs; NaN and infinity never enter or leave when the
inputs are finite.
"""

from __future__ import annotations

import cmath
import math
import re
from typing import NamedTuple

from .errors import ParseError

__all__ = [
    "Polar",
    "norm",
    "polar",
    "nth_root",
    "cpow",
    "parse_complex",
    "format_complex",
]


class Polar(NamedTuple):
    """Polar decomposition radius * (cos angle + i sin angle), angle in (-pi, pi]."""

    radius: float
    angle: float


def norm(z: complex) -> float:
    """Euclidean magnitude sqrt(re^2 + im^2); zero iff z == 0."""
    return math.hypot(z.real, z.imag)


def polar(z: complex) -> Polar:
    """Polar form with the principal angle; polar(0) is defined as (0, 0)."""
    z = complex(z)
    if z == 0:
        return Polar(0.0, 0.0)
    radius, angle = cmath.polar(z)
    if angle <= -math.pi:
        angle = math.pi  # atan2 can return -pi; keep the angle in (-pi, pi]
    return Polar(radius, angle)


def nth_root(z: complex, n: int) -> complex:
    """Principal nth root: radius^(1/n) at one nth of the principal angle."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    z = complex(z)
    if n == 1:
        return z
    radius, angle = polar(z)
    if radius == 0.0:
        return 0j
    return cmath.rect(radius ** (1.0 / n), angle / n)


def cpow(z: complex, n: int) -> complex:
    """z**n by repeated multiplication; cpow(z, 0) == 1 for every z."""
    if n < 0:
        raise ValueError(f"n must be a natural number, got {n}")
    out = complex(1.0)
    z = complex(z)
    for _ in range(n):
        out *= z
    return out


_FLOAT = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_UNSIGNED = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_ONLY = re.compile(rf"^({_FLOAT})$")
_IMAG_ONLY = re.compile(rf"^({_FLOAT})i$")
_REAL_IMAG = re.compile(rf"^({_FLOAT})([+-]{_UNSIGNED})i$")


def parse_complex(text: str, position: int = 1) -> complex:
    """Parse a literal of the form ``a``, ``bi``, ``a+bi``, or ``a-bi``.

    The reals are plain decimals with an optional exponent (``1``, ``1i``,
    ``-0.5+2i``).  ``position`` is reported in errors when the literal is one
    token of a larger input.
    """
    token = text.strip()
    m = _REAL_ONLY.match(token)
    if m:
        return _require_finite(complex(float(m.group(1)), 0.0), token, position)
    m = _IMAG_ONLY.match(token)
    if m:
        return _require_finite(complex(0.0, float(m.group(1))), token, position)
    m = _REAL_IMAG.match(token)
    if m:
        return _require_finite(
            complex(float(m.group(1)), float(m.group(2))), token, position
        )
    raise ParseError(f"malformed complex literal {token!r} (token {position})", position)


def _require_finite(z: complex, token: str, position: int) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError(
            f"complex literal {token!r} overflows a double (token {position})", position
        )
    return z


def format_complex(z: complex) -> str:
    """Inverse of parse_complex; floats use their shortest round-trip form."""
    z = complex(z)
    if z.imag == 0.0:
        return repr(z.real)
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    imag = repr(abs(z.imag)) + "i"
    if z.real == 0.0:
        return imag if sign == "+" else "-" + imag
    return repr(z.real) + sign + imag
