import random

import pytest
from hypothesis import strategies as st

from veclogic.formula import BINARY_TYPES, BOTTOM, TOP, Not, Var, random_formula


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true",
                     help="rewrite tests/golden/*.json from current CLI output")


@pytest.fixture
def update_golden(request):
    return request.config.getoption("--update-golden")


def formulas(names=("p", "q", "r"), max_leaves=12, constants=True):
    leaves = st.sampled_from([Var(n) for n in names])
    if constants:
        leaves = leaves | st.sampled_from([TOP, BOTTOM])

    def extend(children):
        return (st.builds(Not, children)
                | st.builds(lambda cls, a, b: cls(a, b),
                            st.sampled_from(BINARY_TYPES), children, children))

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def corpus(n, seed, max_names=4, max_depth=4):
    """Reproducible list of random formulas over up to ``max_names`` variables."""
    rng = random.Random(seed)
    pool = ("p", "q", "r", "w", "z", "y")[:max_names]
    out = []
    for _ in range(n):
        k = rng.randint(1, max_names)
        out.append(random_formula(rng, pool[:k], max_depth=max_depth))
    return out
