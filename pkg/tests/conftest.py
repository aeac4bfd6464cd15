import os
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tanglekit.contfrac import ContinuedFraction
from tanglekit.expr import Infinity, IntTangle, Invert, Mirror, Product, Rotate, Sum

settings.register_profile(
    "default",
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def cf_terms(max_len=6, bound=6):
    """Any well-formed continued fraction (inner terms nonzero)."""
    inner = st.integers(-bound, bound).filter(bool)
    return st.builds(
        lambda a1, rest: ContinuedFraction((a1, *rest)),
        st.integers(-bound, bound),
        st.lists(inner, max_size=max_len - 1),
    )


def small_cfs(max_crossings=8):
    return cf_terms(max_len=4, bound=3).filter(lambda cf: cf.crossings <= max_crossings)


def rational_trees(max_leaves=4):
    """Trees that stay rational: operations with integer/vertical partners."""
    leaf = st.one_of(st.integers(-3, 3).map(IntTangle), st.just(Infinity()))

    def extend(children):
        integral = st.integers(-3, 3).map(IntTangle)
        return st.one_of(
            children.map(Mirror),
            children.map(Invert),
            children.map(Rotate),
            st.builds(Sum, children, integral),
            st.builds(Sum, integral, children),
            st.builds(Product, children, integral.map(Invert)),
        )

    return st.recursive(leaf, extend, max_leaves=max_leaves)


def algebraic_trees(max_leaves=4):
    """Arbitrary algebraic tangles over integer leaves."""
    leaf = st.integers(-3, 3).map(IntTangle)

    def extend(children):
        return st.one_of(
            children.map(Mirror),
            children.map(Invert),
            children.map(Rotate),
            st.builds(Sum, children, children),
            st.builds(Product, children, children),
        )

    return st.recursive(leaf, extend, max_leaves=max_leaves)


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
