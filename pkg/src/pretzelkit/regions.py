"""Parameter regions used by the q_M rule chain and the squeezedness classifier.

All predicates take a canonical triple (see :func:`pretzel.canonicalize`).
"""

from __future__ import annotations

from .pretzel import PretzelParams, canonicalize, is_two_bridge

FLL = "Feller-Lewark-Lobb"


def _odd(x: int) -> bool:
    return x % 2 == 1


def is_all_odd(cp: PretzelParams) -> bool:
    return all(_odd(x) for x in cp)


def _even_core(cp: PretzelParams) -> bool:
    p, q, r = cp
    return p % 2 == 0 and p >= 2 and q <= -3 and r >= 5 and q + r > 0


def in_even_x(cp: PretzelParams) -> bool:
    """p >= 2 even, q <= -3, r >= 5 odd, q + r > 0, p + q > 0: squeezedness open in general."""
    return _even_core(cp) and cp.p + cp.q > 0


def in_even_y(cp: PretzelParams) -> bool:
    return _even_core(cp) and cp.p + cp.q < 0


def family_member(params: PretzelParams) -> tuple[int, int] | None:
    """(a, b) when the canonical triple is (2b+2, -(2b+1), 2a+1) with b > 0 and b+1 <= a <= 2b."""
    p, q, r = canonicalize(params).params
    if q >= 0 or q % 2 == 0 or r % 2 == 0:
        return None
    b = (-q - 1) // 2
    a = (r - 1) // 2
    if b > 0 and p == 2 * b + 2 and b + 1 <= a <= 2 * b:
        return (a, b)
    return None


def constructive_verdict(cp: PretzelParams) -> tuple[str, str, str] | None:
    """(status, rule, citation) from rules that need no invariant computation."""
    p, q, r = cp
    if is_all_odd(cp):
        return ("Squeezed", "R1", f"all-odd pretzel knots are squeezed ({FLL})")
    if is_two_bridge(cp):
        return ("Squeezed", "R2", "2-bridge knots are alternating, hence squeezed (Goodrick; " + FLL + ")")
    if p % 2 == 0:
        if p * (q + r) <= 0 or q * r > 0:
            return ("Squeezed", "R3", f"p even with p(q+r) <= 0 or qr > 0 ({FLL})")
        if (p + q) * (p + r) < 0:
            return ("NotSqueezed", "R4", f"p even with (p+q)(p+r) < 0 ({FLL})")
        if in_even_y(cp):
            return ("NotSqueezed", "R5", "s differs from the sl3 slice-torus invariant (Lewark)")
    fam = family_member(cp)
    if fam is not None:
        return ("NotSqueezed", "R6", "q_M = a-b but s/2 = a-b-1 on P(2b+2,-(2b+1),2a+1), b+1 <= a <= 2b")
    return None
