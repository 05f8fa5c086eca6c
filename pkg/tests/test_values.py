import pytest
from hypothesis import given
from hypothesis import strategies as st

from dsttripos.errors import BudgetExceeded, Malformed, NotAGraph, Undefined
from dsttripos.values import (
    EMPTY,
    Finite,
    FuncSpace,
    Star,
    apply_value,
    bracket,
    canonical,
    exp_iso,
    from_pair,
    func_space,
    is_value,
    prod_set,
    show,
    sort_key,
    star,
    sum_set,
    tabulate,
    to_pair,
)

F = frozenset

values = st.recursive(
    st.integers(0, 5),
    lambda inner: st.tuples(inner, inner) | st.frozensets(inner, max_size=3),
    max_leaves=10,
)


def test_value_kinds():
    assert is_value(3) and is_value((1, 2)) and is_value(F({1, (2, 3)}))
    assert not is_value(True)
    assert not is_value(-1)
    assert not is_value((1, 2, 3))
    assert not is_value([1])


def test_canonical_order_nat_pair_set():
    vs = [F({1}), (0, 0), 5, F(), (0, F()), 2]
    assert canonical(vs) == (2, 5, (0, 0), (0, F()), F(), F({1}))


def test_show_sorts_set_elements():
    assert show(F({3, 1, (2, 0)})) == "{1 3 (2 . 0)}"
    assert show((F(), 4)) == "({} . 4)"
    with pytest.raises(Malformed):
        show("x")


def test_tabulate_examples():
    assert tabulate(lambda x: x, [1, 2]) == F({(1, 1), (2, 2)})
    assert tabulate(lambda x: EMPTY, [7]) == F({(7, EMPTY)})
    assert tabulate(lambda x: F({x}), [1]) == F({(1, F({1}))})


def test_tabulate_reports_offending_argument():
    g = F({(1, 2)})
    with pytest.raises(Undefined, match="while tabulating at 5"):
        tabulate(lambda x: apply_value(g, x), [1, 5])


def test_application_rejects_ambiguous_graphs():
    with pytest.raises(NotAGraph):
        apply_value(F({(1, 2), (1, 3)}), 1)
    with pytest.raises(Undefined):
        apply_value(F({(1, 2)}), 4)
    with pytest.raises(NotAGraph):
        apply_value(F({1}), 1)


def test_bracket_is_union_of_applications():
    x = F({F({(0, F({1}))}), F({(0, F({2, 3}))})})
    assert bracket(x, 0) == F({1, 2, 3})
    assert bracket(EMPTY, 0) == EMPTY


def test_eager_constructions():
    assert star({1, 2}) == F({F(), F({1}), F({2}), F({1, 2})})
    assert sum_set({1}, {1}) == F({(0, 1), (1, 1)})
    assert prod_set({1, 2}, {9}) == F({(1, 9), (2, 9)})
    assert func_space({1, 2}, {0}) == F({F({(1, 0), (2, 0)})})
    assert len(func_space({1, 2}, {7, 8})) == 4
    assert func_space(set(), {7}) == F({EMPTY})


def test_function_space_membership_is_liberal_enumeration_exact():
    fs = FuncSpace(Finite(F({1})), Finite(F({7, 8})))
    assert F({(1, 7), (5, 8)}) in fs  # a code may carry extra entries
    assert F({(1, 7), (5, 8)}) not in fs.elements()
    assert not fs.listed(F({(1, 7), (5, 8)}))
    assert fs.listed(F({(1, 7)}))
    assert F({(5, 8)}) not in fs


def test_carrier_budget():
    big = Star(Finite(F(range(30))))
    assert big.size == 2 ** 30
    with pytest.raises(BudgetExceeded) as info:
        big.elements()
    assert info.value.size == 2 ** 30


def test_exp_iso_directions():
    w = F({(0, 1), (1, 2), (1, 3)})
    assert exp_iso("to-pair", w) == (F({1}), F({2, 3}))
    assert exp_iso("from-pair", (F({1}), F({2, 3}))) == w
    with pytest.raises(Malformed):
        to_pair(F({(2, 1)}))


@given(values)
def test_canonical_form_idempotent(v):
    from dsttripos.syntax import parse_value
    assert parse_value(show(v)) == v
    assert show(parse_value(show(v))) == show(v)


@given(st.lists(values, max_size=6))
def test_sort_key_is_total(vs):
    once = canonical(vs)
    assert canonical(reversed(once)) == once
    assert [sort_key(v) for v in once] == sorted(sort_key(v) for v in once)


@given(st.frozensets(st.integers(0, 4), max_size=3), st.frozensets(st.integers(0, 4), max_size=3))
def test_star_monotone(x, y):
    assert star(x) <= star(x | y)


@given(st.frozensets(st.integers(0, 3), max_size=3), st.frozensets(st.integers(0, 3), max_size=3))
def test_exp_iso_round_trip_and_order(xs, ys):
    w = from_pair(xs, ys)
    assert to_pair(w) == (xs, ys)
    assert from_pair(*to_pair(w)) == w
    # to-pair preserves and reflects inclusion
    for w2 in (from_pair(xs | {9}, ys), from_pair(xs, F())):
        a, b = to_pair(w2)
        assert (w <= w2) == (xs <= a and ys <= b)


graph_sets = st.lists(
    st.dictionaries(st.sampled_from([0, 1]), st.frozensets(st.integers(0, 4), max_size=2),
                    min_size=2, max_size=2),
    max_size=3,
).map(lambda ds: F(F(d.items()) for d in ds))


@given(graph_sets, graph_sets, st.sampled_from([0, 1]))
def test_bracket_monotone(x, extra, y):
    assert bracket(x, y) <= bracket(x | extra, y)


@given(st.dictionaries(values, values, max_size=5))
def test_apply_after_tabulate(h):
    g = tabulate(h.__getitem__, list(h))
    assert all(apply_value(g, x) == h[x] for x in h)
