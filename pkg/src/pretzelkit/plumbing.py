"""Seifert and plumbing presentations of the double branched cover of P(p, q, r).

Conventions: a Seifert leg is (alpha, beta) with alpha > 1 and
0 < beta < alpha coprime, and the orbifold Euler number is
e = e0 + sum(beta / alpha).  Each leg becomes a chain of vertices whose
weights are the negative continued fraction of -alpha/beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidFraction, InvalidPresentation, PreconditionViolated, ZeroEuler
from .linalg import SymIntMatrix, matrix_signature
from .pretzel import PretzelParams, canonicalize, reciprocal_sum_sign


@dataclass(frozen=True)
class SeifertInvariants:
    e0: int
    legs: tuple[tuple[int, int], ...]
    mirror: bool = False  # True when this presents the cover of the mirror knot

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple((int(a), int(b)) for a, b in self.legs))
        for alpha, beta in self.legs:
            if alpha < 2 or not 0 < beta < alpha or math.gcd(alpha, beta) != 1:
                raise InvalidPresentation(f"bad Seifert leg ({alpha}, {beta})")

    @property
    def euler(self) -> Fraction:
        return self.e0 + sum((Fraction(b, a) for a, b in self.legs), Fraction(0))

    @property
    def period(self) -> int:
        return math.lcm(*(a for a, _ in self.legs)) if self.legs else 1

    def to_dict(self) -> dict:
        return {"e0": self.e0, "legs": [list(leg) for leg in self.legs], "mirror": self.mirror}


@dataclass(frozen=True)
class PlumbingGraph:
    """Star-shaped plumbing: a central vertex with linear chains attached."""

    center: int
    legs: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple(tuple(int(w) for w in leg) for leg in self.legs))
        if any(len(leg) == 0 for leg in self.legs):
            raise InvalidPresentation("empty leg")

    @property
    def weights(self) -> list[int]:
        out = [self.center]
        for leg in self.legs:
            out.extend(leg)
        return out

    @property
    def edges(self) -> list[tuple[int, int]]:
        edges = []
        idx = 1
        for leg in self.legs:
            edges.append((0, idx))
            for k in range(len(leg) - 1):
                edges.append((idx + k, idx + k + 1))
            idx += len(leg)
        return edges

    def intersection_matrix(self) -> SymIntMatrix:
        w = self.weights
        n = len(w)
        m = [[0] * n for _ in range(n)]
        for i, wi in enumerate(w):
            m[i][i] = wi
        for i, j in self.edges:
            m[i][j] = m[j][i] = 1
        return SymIntMatrix.from_rows(m)

    def to_dict(self) -> dict:
        return {"center": self.center, "legs": [list(leg) for leg in self.legs]}

    @classmethod
    def from_dict(cls, d: dict) -> "PlumbingGraph":
        return cls(d["center"], tuple(tuple(leg) for leg in d["legs"]))


def negative_continued_fraction(num: int, den: int) -> list[int]:
    """Expand num/den < -1 as c1 - 1/(c2 - 1/(... - 1/ck)) with every ci <= -2."""
    if den <= 0 or math.gcd(num, den) != 1:
        raise InvalidFraction(f"{num}/{den}: need den > 0 and gcd(num, den) = 1")
    if num >= -den:
        raise InvalidFraction(f"{num}/{den}: need num/den < -1")
    out = []
    while True:
        c = num // den
        out.append(c)
        rem = c * den - num  # c - num/den = rem/den, with -den < rem <= 0
        if rem == 0:
            return out
        num, den = den, rem
        num, den = -num, -den


def evaluate_continued_fraction(coeffs: list[int]) -> Fraction:
    value = Fraction(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        value = c - 1 / value
    return value


def seifert_presentation(params: PretzelParams) -> SeifertInvariants:
    """Seifert invariants for p >= 2, q <= -2, r >= 2.

    If 1/p + 1/q + 1/r > 0 this presents the cover of P(p,q,r) itself;
    if < 0 it presents the cover of the mirror (``mirror=True``).
    """
    p, q, r = params
    if not (p >= 2 and q <= -2 and r >= 2):
        raise PreconditionViolated(f"{params}: need p >= 2, q <= -2, r >= 2")
    s = reciprocal_sum_sign(p, q, r)
    if s == 0:
        raise ZeroEuler(f"{params}: 1/p + 1/q + 1/r = 0")
    if s > 0:
        return SeifertInvariants(-2, ((p, p - 1), (-q, 1), (r, r - 1)))
    return SeifertInvariants(-1, ((p, 1), (-q, -q - 1), (r, 1)), mirror=True)


def plumbing_graph(s: SeifertInvariants) -> PlumbingGraph:
    if len(s.legs) != 3:
        raise InvalidPresentation(f"expected 3 legs for a star-shaped graph, got {len(s.legs)}")
    return PlumbingGraph(s.e0, tuple(tuple(negative_continued_fraction(-a, b)) for a, b in s.legs))


def is_negative_definite(g: PlumbingGraph) -> bool:
    return matrix_signature(g.intersection_matrix()) == -len(g.weights)


def plumbing_triple(params: PretzelParams) -> PretzelParams | None:
    """Canonical triple if it lies in the region covered by the plumbing construction.

    The region is the even normal form with p >= 2, q <= -3, r >= 3 and
    1/p + 1/q + 1/r != 0.  Returns None otherwise.
    """
    cf = canonicalize(params)
    p, q, r = cf.params
    if p % 2 == 0 and p >= 2 and q <= -2 and r >= 2 and reciprocal_sum_sign(p, q, r) != 0:
        return cf.params
    return None
