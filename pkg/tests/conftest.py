import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dsttripos.predicates import mk_pred, upward_close

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", deadline=None, max_examples=15)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

F = frozenset


def sets_from(pool, max_size=None):
    return st.frozensets(st.sampled_from(pool), max_size=max_size or len(pool))


@st.composite
def preds(draw, plus_pool=(1, 2, 3), minus_pool=(7, 8, 9), max_plus=3, max_minus=3):
    """Valid predicates: an arbitrary seed, upward closed."""
    plus = draw(sets_from(plus_pool[:max_plus]))
    minus = draw(sets_from(minus_pool[:max_minus]))
    stars = sorted((F(c) for c in _subsets(sorted(plus))), key=sorted)
    cells = [(a, b) for a in stars for b in sorted(minus)]
    seed = draw(st.frozensets(st.sampled_from(cells))) if cells else F()
    return upward_close(plus, minus, seed)


def small_preds(k=2):
    return preds(max_plus=k, max_minus=k)


def _subsets(xs):
    out = [[]]
    for x in xs:
        out += [s + [x] for s in out]
    return out


def raw(p):
    """A table predicate as a plain ``(plus, minus, rel)`` triple."""
    return (p.plus.items, p.minus.items, p.rel)


@pytest.fixture
def P():
    return mk_pred(F({1}), F({9}), {(F({1}), 9)})


@pytest.fixture
def Q():
    return mk_pred(F({2}), F({8}), {(F({2}), 8)})


# PASS/FAIL lines from the acceptance criteria, echoed after the run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
