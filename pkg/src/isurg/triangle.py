"""Cobordism degree arithmetic and the surgery-triangle degree table.

The integer attached to a cobordism W: Y_in -> Y_out is

    d(W) = -(3/2)(chi + sigma) + (1/2)(b1_out - b1_in + b0_out - b0_in)

and its mod-2 reduction is (1/2)(chi + sigma + b1_out - b1_in + b0_out - b0_in).
An empty end is encoded by b0 = 0 (and b1 = 0); its terms then contribute
nothing, which covers fillings X: empty -> Y.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


@dataclass(frozen=True)
class CobordismData:
    chi: int
    sigma: int
    b1_in: int = 0
    b1_out: int = 0
    b0_in: int = 1
    b0_out: int = 1
    spin: bool = True
    surface_self_int: Optional[int] = None

    def __post_init__(self):
        for name in ("b1_in", "b1_out", "b0_in", "b0_out"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.b0_in == 0 and self.b1_in != 0:
            raise ValueError("empty incoming end (b0_in=0) must have b1_in=0")
        if self.b0_out == 0 and self.b1_out != 0:
            raise ValueError("empty outgoing end (b0_out=0) must have b1_out=0")


@dataclass(frozen=True)
class TriangleDegrees:
    """Z/4 degrees of the three maps in the (S^3, S^3_n, S^3_{n+1}) triangle."""

    deg_surgery: int  # S^3_n -> S^3_{n+1}
    deg_to_s3: int    # S^3_{n+1} -> S^3
    deg_from_s3: int  # S^3 -> S^3_n

    def __post_init__(self):
        if (self.deg_surgery + self.deg_to_s3 + self.deg_from_s3) % 4 != 3:
            raise ValueError("triangle degrees must sum to 3 mod 4")

    def entries(self) -> tuple:
        return (self.deg_surgery, self.deg_to_s3, self.deg_from_s3)


def _end_terms(c: CobordismData) -> Fraction:
    return Fraction(c.b1_out - c.b1_in + c.b0_out - c.b0_in, 2)


def d_degree(c: CobordismData) -> int:
    """The integer d(W); raises if the data gives a non-integral value."""
    val = Fraction(-3 * (c.chi + c.sigma), 2) + _end_terms(c)
    if val.denominator != 1:
        raise ValueError(f"d(W) is not an integer for this data: {val}")
    return int(val)


def d_mod2(c: CobordismData) -> int:
    """Mod-2 degree of the induced map."""
    interior = c.chi + c.sigma + c.b1_out - c.b1_in + c.b0_out - c.b0_in
    if interior % 2 != 0:
        raise ValueError("chi + sigma + delta(b1) + delta(b0) must be even")
    return (interior // 2) % 2


def degree_z4(c: CobordismData) -> int:
    """Z/4 degree of the induced map: d(W) if spin, else d(W) + 2[S].[S]."""
    d = d_degree(c)
    if c.spin:
        return d % 4
    if c.surface_self_int is None:
        raise ValueError("non-spin cobordism needs surface_self_int")
    return (d + 2 * c.surface_self_int) % 4


# Z/4 degree table for the (S^3, S^3_n, S^3_{n+1}) exact triangle, keyed by
# the sign/parity regime of n.  Stored as data: the non-spin entry is pinned
# by the sum-to-3 rule rather than computable from d(W) alone.
_TRIANGLE_TABLE = {
    "even_pos": (0, 2, 1),   # n >= 2, n even
    "odd_pos": (0, 0, 3),    # n >= 1, n odd
    "zero": (2, 2, 3),       # n = 0
    "minus_one": (3, 2, 2),  # n = -1
    "even_neg": (0, 3, 0),   # n <= -2, n even
    "odd_neg": (0, 1, 2),    # n <= -3, n odd
}


def _regime(n: int) -> str:
    if n == 0:
        return "zero"
    if n == -1:
        return "minus_one"
    if n > 0:
        return "even_pos" if n % 2 == 0 else "odd_pos"
    return "even_neg" if n % 2 == 0 else "odd_neg"


def triangle_degrees(n: int) -> TriangleDegrees:
    return TriangleDegrees(*_TRIANGLE_TABLE[_regime(n)])


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def surgery_cobordism_data(n: int) -> CobordismData:
    """Data of the 2-handle trace W: S^3 -> S^3_n(K).

    chi = 1, sigma = sign(n); the outgoing end has b1 = 1 exactly when
    n = 0.  The trace is non-spin exactly when n is odd.
    """
    return CobordismData(
        chi=1,
        sigma=_sign(n),
        b1_out=1 if n == 0 else 0,
        spin=n % 2 == 0,
    )


def surgery_map_cobordism_data(n: int) -> CobordismData:
    """Data of the 2-handle cobordism S^3_n(K) -> S^3_{n+1}(K).

    The attaching curve is rationally nullhomologous except when an end is
    the 0-surgery, so sigma = -1 unless n is 0 or -1.  This map is always
    spin in the triangle.
    """
    return CobordismData(
        chi=1,
        sigma=0 if n in (0, -1) else -1,
        b1_in=1 if n == 0 else 0,
        b1_out=1 if n + 1 == 0 else 0,
        spin=True,
    )


def to_s3_cobordism_data(n: int) -> CobordismData:
    """Data of the cobordism S^3_{n+1}(K) -> S^3 in the triangle.

    This is the reversed, orientation-flipped trace of (n+1)-surgery:
    chi = 1, sigma = -sign(n+1).  Non-spin exactly when n is even.
    """
    return CobordismData(
        chi=1,
        sigma=-_sign(n + 1),
        b1_in=1 if n + 1 == 0 else 0,
        spin=n % 2 != 0,
    )
