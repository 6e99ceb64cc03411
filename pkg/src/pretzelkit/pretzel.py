"""Parameter handling for 3-strand pretzel knots P(p, q, r).

Two symmetries act on the parameters without changing the concordance
class up to mirroring: any permutation of (p, q, r) gives an isotopic knot,
and negating all three entries gives the mirror image (with reversed
orientation).  :func:`canonicalize` picks one representative per orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .errors import MagnitudeError, NotAKnot

DEFAULT_MAX_ABS = 10**6

_PERMS = tuple(permutations(range(3)))


@dataclass(frozen=True, order=True)
class PretzelParams:
    p: int
    q: int
    r: int

    def __post_init__(self):
        for name in ("p", "q", "r"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an int, got {value!r}")

    @classmethod
    def checked(cls, p: int, q: int, r: int, max_abs: int = DEFAULT_MAX_ABS) -> "PretzelParams":
        """Build params, rejecting any entry with |entry| > max_abs."""
        params = cls(p, q, r)
        check_magnitude(params, max_abs)
        return params

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    def negate(self) -> "PretzelParams":
        return PretzelParams(-self.p, -self.q, -self.r)

    def __iter__(self):
        return iter(self.as_tuple())

    def __str__(self):
        return f"P({self.p},{self.q},{self.r})"


@dataclass(frozen=True)
class CanonicalForm:
    """Normalized representative of a pretzel knot.

    ``permutation[i]`` is the index into ``params`` that input entry ``i``
    came from, so ``input[i] == sign * params[permutation[i]]`` with
    ``sign = -1`` when ``mirrored``.
    """

    params: PretzelParams
    mirrored: bool
    permutation: tuple[int, int, int]

    def recover(self) -> PretzelParams:
        sign = -1 if self.mirrored else 1
        t = self.params.as_tuple()
        return PretzelParams(*(sign * t[self.permutation[i]] for i in range(3)))

    @property
    def family(self) -> str:
        """``"odd"`` or ``"even"``, the normal form this representative satisfies."""
        return "odd" if self.params.p % 2 else "even"


def check_magnitude(params: PretzelParams, max_abs: int = DEFAULT_MAX_ABS) -> None:
    for name, value in zip("pqr", params):
        if abs(value) > max_abs:
            raise MagnitudeError(f"|{name}| = {abs(value)} exceeds the magnitude cap {max_abs}")


def is_knot(p: int, q: int, r: int) -> bool:
    """True iff P(p, q, r) has one component: all entries odd, or exactly one even."""
    evens = sum(1 for x in (p, q, r) if x % 2 == 0)
    return evens <= 1


def require_knot(params: PretzelParams) -> None:
    if not is_knot(*params):
        raise NotAKnot(
            f"{params} is a link: need all of p, q, r odd or exactly one of them even"
        )


def _is_normal(t: tuple[int, int, int]) -> bool:
    a, b, c = t
    if a % 2 and b % 2 and c % 2:
        return a > 0 and b > 0
    return a % 2 == 0 and a >= 0 and b % 2 == 1 and c % 2 == 1 and b <= c


@lru_cache(maxsize=1 << 16)
def _canonical(t: tuple[int, int, int]) -> tuple[tuple[int, int, int], bool, tuple[int, int, int]]:
    best = None
    for mirrored in (False, True):
        sign = -1 if mirrored else 1
        for src in _PERMS:
            cand = tuple(sign * t[src[j]] for j in range(3))
            if not _is_normal(cand):
                continue
            perm = [0, 0, 0]
            for j in range(3):
                perm[src[j]] = j
            key = (cand, mirrored, tuple(perm))
            if best is None or key < best:
                best = key
    assert best is not None, t
    return best


def canonicalize(params: PretzelParams) -> CanonicalForm:
    """Return the lexicographically smallest normal-form representative.

    Normal forms: all entries odd with the first two positive, or the even
    entry first and non-negative with the two odd entries in increasing
    order.  Unmirrored representatives win ties.
    """
    require_knot(params)
    cand, mirrored, perm = _canonical(params.as_tuple())
    return CanonicalForm(PretzelParams(*cand), mirrored, perm)


def determinant(params: PretzelParams) -> int:
    """Knot determinant |pq + qr + rp|."""
    require_knot(params)
    p, q, r = params
    return abs(p * q + q * r + r * p)


def reciprocal_sum_sign(p: int, q: int, r: int) -> int:
    """Sign of 1/p + 1/q + 1/r for nonzero entries, in exact integer arithmetic."""
    if 0 in (p, q, r):
        raise ValueError("reciprocal sum undefined when an entry is zero")
    num = q * r + p * r + p * q
    den = p * q * r
    return _sgn(num) * _sgn(den)


def _sgn(m: int) -> int:
    return (m > 0) - (m < 0)


def is_ribbon(params: PretzelParams) -> bool:
    """Known ribbon pretzels: {1, a, -a-4} up to mirroring, or (p+q)(q+r)(r+p) = 0."""
    p, q, r = params
    if (p + q) * (q + r) * (r + p) == 0:
        return True
    for t in ((p, q, r), (-p, -q, -r)):
        for i in range(3):
            rest = [t[j] for j in range(3) if j != i]
            if t[i] == 1 and rest[0] + rest[1] == -4:
                return True
    return False


def is_two_bridge(params: PretzelParams) -> bool:
    return 1 in (abs(params.p), abs(params.q), abs(params.r))
