import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import F, preds, raw
from oracles import powerset
from dsttripos.errors import IndexMismatch, NotUpwardClosed, OutOfCarrier
from dsttripos.predicates import (
    FiniteMap,
    IndexedPred,
    constant,
    mk_pred,
    point,
    reindex,
    upward_close,
    validate,
)
from dsttripos.values import Finite

E = F()


def closed(p):
    plus, minus, rel = raw(p)
    return all((a2, b) in rel for a, b in rel for a2 in powerset(plus) if a <= a2)


def test_truth_triple_is_valid():
    t = mk_pred(E, E, ())
    assert t.plus.items == E and t.minus.items == E and t.rel == E


def test_singleton_relation_is_valid():
    p = mk_pred(F({1}), F({9}), {(F({1}), 9)})
    assert p.holds(F({1}), 9) and not p.holds(E, 9)


def test_missing_superset_reports_witness():
    with pytest.raises(NotUpwardClosed) as info:
        mk_pred(F({1}), F({9}), {(E, 9)})
    assert info.value.witness == (E, F({1}), 9)


def test_out_of_carrier_entries():
    with pytest.raises(OutOfCarrier) as info:
        mk_pred(F({1}), F({9}), {(F({2}), 9)})
    assert info.value.entry == (F({2}), 9)
    with pytest.raises(OutOfCarrier):
        mk_pred(F({1}), F({9}), {(F({1}), 8)})
    with pytest.raises(OutOfCarrier):
        upward_close(F({1}), F({9}), {(E, 7)})


def test_upward_close_examples():
    assert upward_close(F({1}), F({9}), {(E, 9)}).rel == F({(E, 9), (F({1}), 9)})
    assert upward_close(F({1}), F({9}), ()).rel == E
    assert upward_close(F({1, 2}), F({9}), {(F({1}), 9)}).rel == \
        F({(F({1}), 9), (F({1, 2}), 9)})


@given(preds())
def test_accepted_predicates_are_closed(p):
    assert closed(p)
    assert validate(p) is p
    assert mk_pred(p.plus, p.minus, p.rel) == p


@given(preds(), st.data())
def test_upward_close_is_a_closure_operator(p, data):
    plus, minus, rel = raw(p)
    cells = sorted(((a, b) for a in powerset(plus) for b in minus), key=repr)
    s1 = data.draw(st.frozensets(st.sampled_from(cells))) if cells else E
    s2 = s1 | (data.draw(st.frozensets(st.sampled_from(cells))) if cells else E)
    c1, c2 = upward_close(plus, minus, s1), upward_close(plus, minus, s2)
    assert s1 <= c1.rel  # extensive
    assert c1.rel <= c2.rel  # monotone
    assert upward_close(plus, minus, c1.rel) == c1  # idempotent
    # least: any closed relation containing the seed contains the closure
    assert c1.rel <= upward_close(plus, minus, s1 | rel).rel


def test_reindex_examples(P, Q):
    fam = IndexedPred.from_dict({"x": P, "y": Q})
    ident = FiniteMap.identity(["x", "y"])
    assert reindex(ident, fam) == fam
    const = FiniteMap.make(["a", "b"], ["x", "y"], {"a": "x", "b": "x"})
    assert reindex(const, fam).fibers == (P, P)
    swap = FiniteMap.make(["a", "b"], ["x", "y"], {"a": "y", "b": "x"})
    back = reindex(swap, fam)
    assert back["a"] == Q and back["b"] == P


def test_reindex_index_mismatch(P):
    u = FiniteMap.make(["a"], ["x"], {"a": "x"})
    with pytest.raises(IndexMismatch):
        reindex(u, IndexedPred.from_dict({"y": P}))


def test_family_and_map_invariants(P):
    with pytest.raises(IndexMismatch):
        IndexedPred(("a", "a"), (P, P))
    with pytest.raises(IndexMismatch):
        FiniteMap.make(["a"], ["x"], {"a": "z"})
    with pytest.raises(IndexMismatch):
        FiniteMap.make(["a", "b"], ["x"], {"a": "x"})
    with pytest.raises(IndexMismatch):
        IndexedPred.from_dict({"a": P})["b"]
    assert point(P).fibers == (P,)
    assert constant(P, ["b", "a"]).index == ("a", "b")


labels = st.lists(st.sampled_from("abcde"), min_size=1, max_size=4, unique=True)


@given(labels, labels, labels, st.data())
def test_reindex_functorial(I, J, K, data):
    u = FiniteMap.make(I, J, {i: data.draw(st.sampled_from(J)) for i in I})
    v = FiniteMap.make(J, K, {j: data.draw(st.sampled_from(K)) for j in J})
    psi = IndexedPred.from_dict({k: mk_pred(F({n}), E, ()) for n, k in enumerate(K)})
    assert reindex(FiniteMap.identity(K), psi) == psi
    assert reindex(u.then(v), psi) == reindex(u, reindex(v, psi))


def test_table_pred_equality_is_structural():
    a = mk_pred(F({1}), F({9}), {(F({1}), 9)})
    b = mk_pred(Finite(F({1})), Finite(F({9})), [(F({1}), 9)])
    assert a == b and hash(a) == hash(b)
