import pytest

from semigroup_hh import make_context

# target instances and characteristics exercised throughout the suite
INSTANCES = [(2, 3), (2, 5), (3, 4), (3, 5), (4, 3)]
CHARS = [0, 2, 3, 5]

ALL_COMBOS = [(a, b, p) for (a, b) in INSTANCES for p in CHARS]

# one representative per structural case, kept small for fast tests
SMALL_COMBOS = [
    (2, 3, 0),   # case I
    (2, 3, 2),   # case II, char | a, char 2 with 4 not dividing a
    (2, 3, 3),   # case II, char | b (working pair swaps)
    (4, 3, 2),   # case II, char 2 with 4 | a (odd square vanishes)
    (3, 4, 3),   # case II, char odd
]


@pytest.fixture(params=SMALL_COMBOS, ids=lambda c: f"a{c[0]}b{c[1]}p{c[2]}")
def small_ctx(request):
    a, b, p = request.param
    return make_context(a, b, p)


@pytest.fixture(params=ALL_COMBOS, ids=lambda c: f"a{c[0]}b{c[1]}p{c[2]}")
def any_ctx(request):
    a, b, p = request.param
    return make_context(a, b, p)
