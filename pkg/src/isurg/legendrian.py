"""Legendrian (tb, r) bookkeeping and the Stein lower bounds they produce.

A stabilization sends (tb, r) to (tb - 1, r +/- 1), so tb + r stays odd.
Stabilizing down to a target tb realizes an arithmetic progression of
rotation numbers; together with their conjugates (r -> -r) these count
Stein structures on the surgery trace with distinct first Chern classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graded import GradedDimZ2


@dataclass(frozen=True)
class LegendrianRep:
    tb: int
    r: int

    def __post_init__(self):
        if (self.tb + self.r) % 2 == 0:
            raise ValueError(f"tb + r must be odd, got tb={self.tb}, r={self.r}")

    # Both classical combinations are exposed by name: the self-linking
    # number of the transverse push-off is tb - r, while some arguments
    # select representatives by the value of tb + r.
    def tb_plus_r(self) -> int:
        return self.tb + self.r

    def tb_minus_r(self) -> int:
        return self.tb - self.r


def stabilize(rep: LegendrianRep, sign: int) -> LegendrianRep:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return LegendrianRep(rep.tb - 1, rep.r + sign)


def rotation_numbers_after(rep: LegendrianRep, target_tb: int) -> list:
    """All rotation numbers reachable by stabilizing rep down to target_tb.

    With n = 1 - target_tb these are r - tb - n + 1 + 2k for
    0 <= k <= tb + n - 1; there are tb - target_tb + 1 of them, all of one
    parity.  Returned sorted ascending.
    """
    if target_tb > rep.tb:
        raise ValueError(f"target_tb {target_tb} exceeds tb {rep.tb}")
    n = 1 - target_tb
    base = rep.r - rep.tb - n + 1
    return [base + 2 * k for k in range(rep.tb + n)]


def distinct_chern_count(rep: LegendrianRep, target_tb: int) -> int:
    """Number of distinct Chern classes among the reachable rotation numbers
    and their conjugates; r = 0 is not double-counted."""
    rots = rotation_numbers_after(rep, target_tb)
    return len(set(rots) | {-r for r in rots})


def prop41_lower_bound(s: int, n: int) -> GradedDimZ2:
    """Graded lower bound for -n-surgery on a knot with maximal self-linking s:
    at least s + n in grading 0 and s in grading 1."""
    if s < 0:
        raise ValueError("s must be >= 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    return GradedDimZ2(s + n, s)
