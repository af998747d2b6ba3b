"""Coefficient-list polynomials over the complex numbers.

A polynomial is a sequence of coefficients with a0 first, so (1, 1j, 3)
stands for 1 + i z + 3 z^2.  Operations return plain tuples, the values are
immutable, and the zero polynomial is the empty tuple.  A polynomial is
normalized when its last coefficient is nonzero (or it is empty).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .complexmath import norm
from .errors import CannotDeflateConstant, DegenerateZeroPolynomial, ZeroConstantTerm

Poly = tuple[complex, ...]

__all__ = [
    "Poly",
    "as_poly",
    "evaluate",
    "degree",
    "truncate",
    "is_constant",
    "scale_to_unit_constant",
    "shift",
    "derivative",
    "max_coeff_norm",
    "deflate",
    "multiply",
    "from_roots",
]


def as_poly(coeffs: Iterable[complex]) -> Poly:
    """Coerce an iterable of numbers to a coefficient tuple (a0 first)."""
    return tuple(complex(c) for c in coeffs)


def evaluate(p: Sequence[complex], z: complex) -> complex:
    """Horner evaluation of sum a_i z^i; the empty polynomial evaluates to 0."""
    z = complex(z)
    acc = 0j
    for c in reversed(p):
        acc = acc * z + complex(c)
    return acc


def truncate(p: Sequence[complex], epsilon: float = 0.0) -> Poly:
    """Drop the trailing run of (near-)zero coefficients.

    The default epsilon = 0 keeps the comparison exact, which is right for
    user input; a positive epsilon strips float dust from computed
    polynomials.
    """
    q = as_poly(p)
    end = len(q)
    while end > 0 and norm(q[end - 1]) <= epsilon:
        end -= 1
    return q[:end]


def degree(p: Sequence[complex]) -> int:
    """Degree of the normalized form; the zero polynomial has none."""
    q = truncate(p)
    if not q:
        raise DegenerateZeroPolynomial("the zero polynomial has no degree")
    return len(q) - 1


def is_constant(p: Sequence[complex]) -> bool:
    """True when the normalized form has at most one coefficient."""
    return len(truncate(p)) <= 1


def scale_to_unit_constant(p: Sequence[complex]) -> Poly:
    """Divide through by a0 so the constant term is exactly 1."""
    q = as_poly(p)
    if not q or q[0] == 0:
        raise ZeroConstantTerm("a0 = 0: the origin is already a root")
    a0 = q[0]
    return (complex(1.0),) + tuple(c / a0 for c in q[1:])


def shift(p: Sequence[complex], z0: complex) -> Poly:
    """Coefficients of q(z) = p(z + z0).

    Computed by repeated synthetic division at z0 (a Taylor shift), which is
    numerically gentler than expanding binomials.  The leading coefficient is
    preserved exactly, so the degree never changes.
    """
    z0 = complex(z0)
    a = [complex(c) for c in p]
    n = len(a)
    for j in range(n - 1):
        for i in range(n - 2, j - 1, -1):
            a[i] += z0 * a[i + 1]
    return tuple(a)


def derivative(p: Sequence[complex]) -> Poly:
    """Power-rule derivative; the degree drops by one."""
    return tuple(i * complex(p[i]) for i in range(1, len(p)))


def max_coeff_norm(p: Sequence[complex], exclude_leading: bool = False) -> float:
    """Largest coefficient norm, optionally over all but the last entry."""
    q = as_poly(p)
    sel = q[:-1] if exclude_leading else q
    if not sel:
        raise DegenerateZeroPolynomial("no coefficients to take a maximum over")
    return max(norm(c) for c in sel)


def deflate(p: Sequence[complex], r: complex) -> tuple[Poly, complex]:
    """Synthetic division by (z - r): returns (quotient, remainder).

    p(z) = (z - r) * q(z) + remainder, and the remainder equals p(r) up to
    rounding.
    """
    q = truncate(p)
    if not q:
        raise DegenerateZeroPolynomial("cannot deflate the zero polynomial")
    if len(q) == 1:
        raise CannotDeflateConstant("cannot deflate a constant polynomial")
    r = complex(r)
    n = len(q) - 1
    b = [0j] * n
    b[n - 1] = q[n]
    for i in range(n - 2, -1, -1):
        b[i] = q[i + 1] + r * b[i + 1]
    rem = q[0] + r * b[0]
    return tuple(b), rem


def multiply(p: Sequence[complex], q: Sequence[complex]) -> Poly:
    """Coefficient convolution; empty factors give the zero polynomial."""
    a, b = as_poly(p), as_poly(q)
    if not a or not b:
        return ()
    out = [0j] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return tuple(out)


def from_roots(lead: complex, roots: Iterable[complex]) -> Poly:
    """Expand lead * prod (z - r_i)."""
    out: Poly = (complex(lead),)
    for r in roots:
        out = multiply(out, (-complex(r), complex(1.0)))
    return out
