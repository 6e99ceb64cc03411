"""The slice-torus invariant q_M of P(p, q, r), where it can be pinned down.

q_M always lies within 1 of -sigma/2.  Rules below are tried in order on
the canonical representative; the first one that applies fixes q_M
exactly, otherwise the bound interval is returned.  Results for the input
knot are obtained by negating when the canonical form is mirrored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionViolated
from .plumbing import plumbing_triple, seifert_presentation
from .pretzel import PretzelParams, canonicalize, is_ribbon
from .rasmussen import s_invariant, s_table, torus_slice_torus
from .regions import constructive_verdict, is_all_odd
from .signature import jabuka_raw
from .tau import DeltaProfile, is_tau_nondecreasing

EXACT = "Exact"
INTERVAL = "Interval"

RULE_NAMES = {
    1: "ribbon",
    2: "connected-sum",
    3: "all-odd",
    4: "squeezed",
    5: "l-space",
    6: "table",
    7: "bound",
}


@dataclass(frozen=True)
class QmResult:
    kind: str
    value: int | None
    lo: int
    hi: int
    rule: int
    citation: str

    def __post_init__(self):
        if self.kind == EXACT:
            if not (self.value == self.lo == self.hi):
                raise ValueError("exact result must have lo == hi == value")
        elif self.kind == INTERVAL:
            if self.value is not None or self.lo > self.hi:
                raise ValueError("bad interval result")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def exact(self) -> bool:
        return self.kind == EXACT

    @property
    def rule_name(self) -> str:
        return RULE_NAMES[self.rule]

    def negate(self) -> "QmResult":
        value = None if self.value is None else -self.value
        return QmResult(self.kind, value, -self.hi, -self.lo, self.rule, self.citation)

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "lo": self.lo, "hi": self.hi, "rule": self.rule, "citation": self.citation}
        if self.value is not None:
            d["value"] = self.value
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "QmResult":
        return cls(d["kind"], d.get("value"), d["lo"], d["hi"], d["rule"], d["citation"])


@lru_cache(maxsize=1 << 14)
def canonical_profile(cp: PretzelParams) -> DeltaProfile | None:
    """Delta profile of the canonical triple's Seifert presentation, if in the plumbing region."""
    if plumbing_triple(cp) is None:
        return None
    return is_tau_nondecreasing(seifert_presentation(cp))


def table_value(cp: PretzelParams) -> int | None:
    """Closed-form rows for p > 0 even, q <= r odd; None if no row applies."""
    p, q, r = cp
    if not (p > 0 and p % 2 == 0 and q % 2 and r % 2 and q <= r):
        return None
    h = (q + r) // 2
    if q > 0 and r > 0:
        return h - 1
    if q < 0 < r:
        if q + r <= 0:
            return h
        if p + q == 1 and 2 * q + r <= -1:
            return h
        if p + q < 0:
            return h
        return None
    if q < 0 and r < 0:
        return h
    return None


L_SPACE_CITATION = (
    "tau-sequence non-decreasing, so the double branched cover is an L-space (Nemethi); "
    "q_M = -sigma/2 for L-space double branched covers (Iida-Taniguchi)"
)


def qm_candidates(cp: PretzelParams) -> list[tuple[int, int, str]]:
    """Every exact rule that applies to a canonical triple, as (rule, value, citation)."""
    p, q, r = cp
    sigma = jabuka_raw(p, q, r)
    out = []
    if is_ribbon(cp):
        out.append((1, 0, "ribbon knots are slice, so every slice-torus invariant vanishes"))
    if p == 0:
        value = torus_slice_torus(q) + torus_slice_torus(r)
        out.append((2, value, "P(0,q,r) = T(2,q) # T(2,r); additivity and f(-K) = -f(K)"))
    if is_all_odd(cp):
        out.append((3, 0 if min(p, q) <= -r else -1, "all-odd pretzels are squeezed, so q_M = s/2"))
    verdict = constructive_verdict(cp)
    if verdict is not None and verdict[0] == "Squeezed":
        out.append((4, s_table(p, q, r) // 2, f"squeezed by {verdict[1]}; slice-torus invariants agree (Feller-Lewark-Lobb)"))
    profile = canonical_profile(cp)
    tv = table_value(cp)
    if profile is not None and profile.nondecreasing:
        cite = L_SPACE_CITATION
        if tv is None:
            cite += "; beyond the closed-form tables"
        out.append((5, -sigma // 2, cite))
    if tv is not None:
        out.append((6, tv, "closed-form table for p > 0 even, q <= r odd"))
    return out


@lru_cache(maxsize=1 << 16)
def _canonical_qm(cp: PretzelParams) -> QmResult:
    sigma = jabuka_raw(*cp)
    if sigma % 2:
        raise PreconditionViolated(f"odd signature {sigma} for {cp}")
    center = -sigma // 2
    cands = qm_candidates(cp)
    if cands:
        rule, value, cite = cands[0]
        return QmResult(EXACT, value, value, value, rule, cite)
    return QmResult(INTERVAL, None, center - 1, center + 1, 7, "|q_M + sigma/2| <= 1 (Iida-Taniguchi)")


def qm(params: PretzelParams) -> QmResult:
    cf = canonicalize(params)
    result = _canonical_qm(cf.params)
    return result.negate() if cf.mirrored else result


def g4_lower_bound(params: PretzelParams) -> int:
    """max(|s/2|, |q_M| when exact, 0); every slice-torus invariant bounds g4 in absolute value."""
    bound = abs(s_invariant(params)) // 2
    res = qm(params)
    if res.exact:
        bound = max(bound, abs(res.value))
    return max(bound, 0)
