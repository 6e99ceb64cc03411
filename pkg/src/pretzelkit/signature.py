"""Closed-form knot signatures of 3-strand pretzel knots.

Convention: P(1, 1, 1) has signature +2, and T(2, n) with n > 0 has
signature -(n - 1).
"""

from __future__ import annotations

from .errors import PreconditionViolated
from .pretzel import PretzelParams, canonicalize, reciprocal_sum_sign


def sign3(m: int) -> int:
    """-1, 0 or 1 according to the sign of m."""
    return (m > 0) - (m < 0)


def torus_signature(n: int) -> int:
    """Signature of the torus knot T(2, n), n odd."""
    return -sign3(n) * (abs(n) - 1)


def jabuka_raw(p: int, q: int, r: int) -> int:
    """Evaluate Jabuka's signature formula on an ordered triple.

    Valid when all entries are odd, or when ``p`` is the even entry
    (``p = 0`` uses the connected-sum formula for T(2,q) # T(2,r)).
    """
    d = p * q + q * r + r * p
    if p % 2 and q % 2 and r % 2:
        return sign3(p + q) + sign3((p + q) * d)
    if p % 2 == 0 and q % 2 and r % 2:
        base = torus_signature(q) + torus_signature(r)
        if p == 0:
            return base
        return base - sign3(q * r * (q + r)) + sign3((q + r) * d)
    raise PreconditionViolated(f"no signature formula for the ordering ({p}, {q}, {r})")


def signature(params: PretzelParams) -> int:
    """Signature of P(p, q, r), computed on the canonical representative."""
    cf = canonicalize(params)
    value = jabuka_raw(*cf.params)
    return -value if cf.mirrored else value


def signature_corollary(params: PretzelParams) -> int:
    """Signature for p > 0 even, q < 0 < r odd, r != -q, by the sign of 1/p+1/q+1/r."""
    p, q, r = params
    if not (p > 0 and p % 2 == 0 and q < 0 and q % 2 and r > 0 and r % 2 and r != -q):
        raise PreconditionViolated(
            f"{params}: need p > 0 even, q < 0 odd, r > 0 odd and r != -q"
        )
    s = reciprocal_sum_sign(p, q, r)
    if s == 0:
        raise PreconditionViolated(f"{params}: 1/p + 1/q + 1/r = 0")
    return -(q + r) if s > 0 else -(q + r) + 2
