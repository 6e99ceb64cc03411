"""Rasmussen s-invariant of P(p, q, r) from the Suzuki/Lewark closed forms."""

from __future__ import annotations

from .errors import Unsupported
from .pretzel import PretzelParams, canonicalize, is_ribbon


def torus_slice_torus(n: int) -> int:
    """Value of any slice-torus invariant on T(2, n), n odd.

    Forced by f(T(2,n)) = (n-1)/2 for n > 0 and f(-K) = -f(K).
    """
    if n % 2 == 0:
        raise ValueError(f"T(2, {n}) is not a knot")
    return (n - 1) // 2 if n > 0 else (n + 1) // 2


def torus_as_printed(n: int) -> int:
    """The alternative piecewise value (1 - n)/2 for n < 0, kept only for comparison."""
    return (n - 1) // 2 if n > 0 else (1 - n) // 2


def s_table(p: int, q: int, r: int) -> int:
    """Evaluate the closed-form table on a normal-form triple.

    Raises Unsupported when the triple is not in a normal form or no row applies.
    """
    if p % 2 and q % 2 and r % 2:
        if not (p > 0 and q > 0):
            raise Unsupported(f"odd table needs p, q > 0, got ({p}, {q}, {r})")
        return 0 if min(p, q) <= -r else -2
    if not (p % 2 == 0 and q % 2 and r % 2 and p >= 0 and q <= r):
        raise Unsupported(f"({p}, {q}, {r}) is not in a normal form")
    if p == 0:
        return 2 * (torus_slice_torus(q) + torus_slice_torus(r))
    if q > 0 and r > 0:
        return q + r - 2
    if q < 0 < r:
        if q + r <= 0:
            return q + r
        if p + q > 0:
            return q + r - 2
        if p + q < 0:
            return q + r
    if q < 0 and r < 0:
        return q + r
    if is_ribbon(PretzelParams(p, q, r)):
        return 0
    raise Unsupported(f"no table row covers ({p}, {q}, {r})")


def s_invariant(params: PretzelParams) -> int:
    """Rasmussen s of P(p, q, r); always even."""
    cf = canonicalize(params)
    value = s_table(*cf.params)
    return -value if cf.mirrored else value
