"""Closed-form graded dimensions of integral surgeries on L-space knots.

All floor/ceiling arithmetic rounds toward -inf/+inf respectively, which
matters for negative surgery coefficients; Python's // already floors, and
ceil_div below is its mirror.
"""

from __future__ import annotations

from .graded import GradedDimZ2, GradedDimZ4


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def dims_z2(g: int, n: int) -> GradedDimZ2:
    """Z/2-graded dimensions of n-surgery on a genus-g instanton L-space knot.

    Three regimes: (2g-1-n, 2g-1) for n <= 0, (2g-1, 2g-1-n) for
    0 <= n <= 2g-1, and (n, 0) for n >= 2g-1.  The overlaps at n = 0 and
    n = 2g-1 agree.
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    if n <= 0:
        return GradedDimZ2(2 * g - 1 - n, 2 * g - 1)
    if n <= 2 * g - 1:
        return GradedDimZ2(2 * g - 1, 2 * g - 1 - n)
    return GradedDimZ2(n, 0)


def dims_z4(g: int, n: int) -> GradedDimZ4:
    """Z/4-graded dimensions of n-surgery on a genus-g knot with a positive
    lens-space surgery.

    The lens-space hypothesis is the caller's obligation; without it only
    the mod-2 collapse is known to be correct.
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    if n <= -1:
        return GradedDimZ4(g + (-n) // 2, g - 1, g + (-(n + 1)) // 2, g)
    if n == 0:
        return GradedDimZ4(g - 1, g - 1, g, g)
    if n <= 2 * g - 1:
        return GradedDimZ4(g, g - _ceil_div(n, 2), g - 1, g - 1 - n // 2)
    return lens_space_dims(n)


def lens_space_dims(n: int) -> GradedDimZ4:
    """Z/4 vector of a lens space with |H_1| = n: (ceil((n+1)/2), 0, floor((n-1)/2), 0)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return GradedDimZ4(_ceil_div(n + 1, 2), 0, (n - 1) // 2, 0)


def trefoil_one_over_n(n: int) -> GradedDimZ2:
    """Z/2 dimensions of 1/n-surgery on the right-handed trefoil: (n, n-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return GradedDimZ2(n, n - 1)
