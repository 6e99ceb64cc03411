"""Delta and tau sequences of a Seifert presentation, and the monotonicity test.

For a presentation (e0; (a1, b1), ..., (al, bl)) with e < 0,

    Delta(n) = 1 - e0*n + sum(floor(-bi*n / ai)),
    tau(0) = 0,  tau(n+1) = tau(n) + Delta(n).

tau is non-decreasing iff Delta(n) >= 0 for all n >= 0.  Let L be the
lcm of the ai.  Then Delta(n + L) = Delta(n) - e*L, and -e*L is a
positive integer, so on each residue class mod L the minimum of Delta is
taken at the representative in [0, L).  One period therefore decides the
question for all n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NonNegativeEuler, PreconditionViolated
from .plumbing import SeifertInvariants


@dataclass(frozen=True)
class DeltaProfile:
    seifert: SeifertInvariants
    period: int
    increment: int
    min_over_period: int
    first_violation: int | None

    @property
    def nondecreasing(self) -> bool:
        return self.first_violation is None

    def to_dict(self) -> dict:
        return {
            "L": self.period,
            "increment": self.increment,
            "min": self.min_over_period,
            "first_violation": self.first_violation,
            "nondecreasing": self.nondecreasing,
        }


def delta(s: SeifertInvariants, n: int) -> int:
    total = 1 - s.e0 * n
    for a, b in s.legs:
        total += (-b * n) // a
    return total


def delta_with_offsets(s: SeifertInvariants, offsets: Sequence[int], n: int) -> int:
    """Delta for a general spin^c structure, offsets = (A0, A1, ..., Al)."""
    if len(offsets) != len(s.legs) + 1 or any(x < 0 for x in offsets):
        raise PreconditionViolated(
            f"need {len(s.legs) + 1} non-negative offsets, got {list(offsets)}"
        )
    total = 1 + offsets[0] - s.e0 * n
    for (a, b), shift in zip(s.legs, offsets[1:]):
        total += (-b * n + shift) // a
    return total


def tau_sequence(s: SeifertInvariants, N: int, offsets: Sequence[int] | None = None) -> list[int]:
    """[tau(0), ..., tau(N)]."""
    out = [0]
    for n in range(N):
        d = delta(s, n) if offsets is None else delta_with_offsets(s, offsets, n)
        out.append(out[-1] + d)
    return out


def is_tau_nondecreasing(s: SeifertInvariants) -> DeltaProfile:
    e = s.euler
    if e >= 0:
        raise NonNegativeEuler(f"orbifold Euler number {e} is not negative")
    L = s.period
    inc = -e * L
    assert inc.denominator == 1
    lowest = None
    first = None
    e0 = s.e0
    legs = s.legs
    for n in range(L):
        d = 1 - e0 * n
        for a, b in legs:
            d += (-b * n) // a
        if lowest is None or d < lowest:
            lowest = d
        if d < 0 and first is None:
            first = n
    return DeltaProfile(s, L, int(inc), lowest, first)
