from itertools import product

from pretzelkit.pretzel import PretzelParams, canonicalize, is_knot


def knot_grid(bound):
    """All knot triples with every entry in [-bound, bound]."""
    return [PretzelParams(*t) for t in product(range(-bound, bound + 1), repeat=3) if is_knot(*t)]


def canonical_grid(bound):
    return sorted({canonicalize(p).params for p in knot_grid(bound)})


_cache = {}


def cached(name, fn, *args):
    key = (name, args)
    if key not in _cache:
        _cache[key] = fn(*args)
    return _cache[key]
