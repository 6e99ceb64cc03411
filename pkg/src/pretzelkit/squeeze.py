"""Squeezedness classification of P(p, q, r) with rule provenance.

Squeezed knots have all slice-torus invariants equal, so an exact q_M
that differs from s/2 certifies non-squeezedness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .pretzel import PretzelParams, canonicalize
from .qm import qm
from .rasmussen import s_invariant
from .regions import constructive_verdict, family_member

SQUEEZED = "Squeezed"
NOT_SQUEEZED = "NotSqueezed"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SqueezeVerdict:
    status: str
    rule: str
    citation: str
    witness: tuple[int, int] | None = None  # (q_M, s/2) when separated by invariants

    def to_dict(self) -> dict:
        d = {"status": self.status, "rule": self.rule, "citation": self.citation}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SqueezeVerdict":
        w = d.get("witness")
        return cls(d["status"], d["rule"], d["citation"], tuple(w) if w is not None else None)


def separation_witness(params: PretzelParams) -> tuple[int, int] | None:
    """(q_M, s/2) if q_M is exact and differs from s/2, else None."""
    res = qm(params)
    half_s = s_invariant(params) // 2
    if res.exact and res.value != half_s:
        return (res.value, half_s)
    return None


def classify(params: PretzelParams) -> SqueezeVerdict:
    cf = canonicalize(params)
    sign = -1 if cf.mirrored else 1
    verdict = constructive_verdict(cf.params)
    witness = separation_witness(params)

    if verdict is not None:
        status, rule, cite = verdict
        if status == SQUEEZED and witness is not None:
            raise InvariantViolation(f"{params} squeezed by {rule} but q_M != s/2: {witness}")
        if rule == "R6":
            a, b = family_member(cf.params)
            expected = (sign * (a - b), sign * (a - b - 1))
            if witness != expected:
                raise InvariantViolation(f"{params}: family witness {witness} != {expected}")
        return SqueezeVerdict(status, rule, cite, witness if rule == "R6" else None)

    if witness is not None:
        return SqueezeVerdict(
            NOT_SQUEEZED, "R7",
            "exact q_M differs from s/2; squeezed knots have equal slice-torus invariants (Feller-Lewark-Lobb)",
            witness,
        )
    return SqueezeVerdict(UNKNOWN, "R8", "no rule settles squeezedness")
