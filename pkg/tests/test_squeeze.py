from itertools import permutations

import pytest

from pretzelkit.pretzel import PretzelParams
from pretzelkit.regions import family_member, in_even_x, in_even_y
from pretzelkit.squeeze import NOT_SQUEEZED, SQUEEZED, UNKNOWN, SqueezeVerdict, classify, separation_witness

from conftest import cached, canonical_grid, knot_grid


def test_examples():
    v = classify(PretzelParams(4, -3, 5))
    assert (v.status, v.rule, v.witness) == (NOT_SQUEEZED, "R6", (1, 0))

    v = classify(PretzelParams(3, 5, 7))
    assert (v.status, v.rule) == (SQUEEZED, "R1")

    v = classify(PretzelParams(4, -3, 7))
    assert (v.status, v.rule, v.witness) == (NOT_SQUEEZED, "R7", (2, 1))


@pytest.mark.parametrize("triple, status, rule", [
    ((4, 1, 5), SQUEEZED, "R2"),
    ((0, 3, 5), SQUEEZED, "R3"),
    ((4, -7, -3), SQUEEZED, "R3"),
    ((4, -3, -3), SQUEEZED, "R3"),
    ((2, -3, 5), NOT_SQUEEZED, "R4"),
    ((6, -7, 9), NOT_SQUEEZED, "R4"),
])
def test_constructive_rules(triple, status, rule):
    v = classify(PretzelParams(*triple))
    assert (v.status, v.rule) == (status, rule)


def test_family_member_examples():
    assert family_member(PretzelParams(4, -3, 5)) == (2, 1)
    assert family_member(PretzelParams(6, -5, 9)) == (4, 2)
    assert family_member(PretzelParams(4, -3, 11)) is None
    assert family_member(PretzelParams(-4, 3, -5)) == (2, 1)
    assert family_member(PretzelParams(3, 5, 7)) is None


def test_regions_partition_even_core():
    assert in_even_x(PretzelParams(4, -3, 5)) and not in_even_y(PretzelParams(4, -3, 5))
    assert in_even_y(PretzelParams(2, -3, 5)) and not in_even_x(PretzelParams(2, -3, 5))


def test_no_contradictions_on_grid():
    grid = cached("canon15", canonical_grid, 15)
    seen = {SQUEEZED: 0, NOT_SQUEEZED: 0, UNKNOWN: 0}
    for cp in grid:
        v = classify(cp)  # raises InvariantViolation on a contradiction
        seen[v.status] += 1
        if v.status == NOT_SQUEEZED and v.rule in ("R6", "R7"):
            q, half_s = v.witness
            assert q != half_s
        if v.status == UNKNOWN:
            assert in_even_x(cp)
        fam = family_member(cp)
        if fam is not None:
            a, b = fam
            assert separation_witness(cp) == (a - b, a - b - 1)
    assert all(seen.values())


def test_verdict_symmetry():
    for params in knot_grid(7):
        v = classify(params)
        for perm in permutations(params.as_tuple()):
            assert classify(PretzelParams(*perm)) == v
        m = classify(params.negate())
        assert (m.status, m.rule) == (v.status, v.rule)
        if v.witness is not None:
            assert m.witness == (-v.witness[0], -v.witness[1])


def test_serialization():
    v = classify(PretzelParams(4, -3, 7))
    d = v.to_dict()
    assert d["witness"] == [2, 1]
    assert SqueezeVerdict.from_dict(d) == v
    v = classify(PretzelParams(3, 5, 7))
    assert "witness" not in v.to_dict()
