from itertools import permutations

import pytest

from pretzelkit.errors import NotAKnot, PreconditionViolated
from pretzelkit.pretzel import PretzelParams
from pretzelkit.signature import jabuka_raw, sign3, signature, signature_corollary

from conftest import knot_grid


@pytest.mark.parametrize("m, s", [(7, 1), (0, 0), (-4, -1)])
def test_sign3(m, s):
    assert sign3(m) == s


@pytest.mark.parametrize("triple, sigma", [
    ((1, 1, 1), 2),     # Sign(2) + Sign(2*3)
    ((4, -3, 5), -2),
    ((0, 3, 5), -6),    # sigma(T(2,3)) + sigma(T(2,5)) = -2 - 4
    ((-2, 3, 7), -8),   # positive knot
])
def test_signature_examples(triple, sigma):
    assert signature(PretzelParams(*triple)) == sigma


@pytest.mark.parametrize("triple, sigma", [((4, -3, 5), -2), ((2, -3, 5), -2), ((4, -3, 13), -8)])
def test_corollary_examples(triple, sigma):
    params = PretzelParams(*triple)
    assert signature_corollary(params) == sigma
    assert signature(params) == sigma


def test_corollary_preconditions():
    for bad in [(3, -3, 5), (4, 3, 5), (4, -3, 3), (-4, -3, 5)]:
        with pytest.raises(PreconditionViolated):
            signature_corollary(PretzelParams(*bad))


def test_signature_rejects_links():
    with pytest.raises(NotAKnot):
        signature(PretzelParams(2, 4, 5))


def test_grid_properties():
    for params in knot_grid(9):
        sigma = signature(params)
        assert sigma % 2 == 0
        assert signature(params.negate()) == -sigma
        for perm in permutations(params.as_tuple()):
            assert signature(PretzelParams(*perm)) == sigma


def test_raw_formula_mirror_antisymmetry():
    checked = 0
    for params in knot_grid(9):
        p, q, r = params
        if p % 2 and q % 2 and r % 2 or p % 2 == 0:
            assert jabuka_raw(-p, -q, -r) == -jabuka_raw(p, q, r)
            checked += 1
    assert checked > 1000


def test_corollary_agrees_on_its_domain():
    count = 0
    for p in range(2, 16, 2):
        for q in range(-15, 0, 2):
            for r in range(1, 16, 2):
                if r == -q:
                    continue
                params = PretzelParams(p, q, r)
                assert signature_corollary(params) == signature(params)
                count += 1
    assert count > 300
