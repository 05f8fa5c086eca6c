"""Realizers: checking them, building them, and finding them by search."""
from dsttripos import (
    FALSITY, TRUTH, case_realizers, check_realizes, conj, curry, decide_entails, disj,
    ex_falso, id_realizer, impl, mk_pred, proj_realizer, uncurry,
)
from dsttripos.checker import space_size
from dsttripos.connectives import case_realizers_literal
from dsttripos.laws import pinned_case_instance

F = frozenset
P = mk_pred(F({1}), F({9}), {(F({1}), 9)})
Q = mk_pred(F({2}), F({8}), {(F({2}), 8)})

print("identity on P:", id_realizer(P))
print("  checks:", check_realizes(id_realizer(P), P, P).describe())

left = proj_realizer("left", P, Q)
print("\nP and Q |- P by the left projection:", check_realizes(left, conj(P, Q), P).describe())

# Curry the projection to get P |- Q -> P, then undo it.
c = curry(proj_realizer("left", P, Q), P, Q, P)
print("curried:", check_realizes(c, P, impl(Q, P)).describe())
u = uncurry(c, P, Q, P)
print("uncurried again:", check_realizes(u, conj(P, Q), P).describe())

# Search: the monotone strategy builds the largest candidate and checks it.
r = decide_entails(conj(P, Q), disj(Q, P))
print("\nP and Q |- Q or P found:", r is not None)
print("truth |- falsity: space of", space_size(TRUTH, FALSITY), "candidate,",
      "realizer", decide_entails(TRUTH, FALSITY, strategy="exhaustive"))
print("falsity |- P:", check_realizes(ex_falso(P), FALSITY, P).describe())

# Case analysis must feed the right component to the second realizer.
p, q, r_, e, f = pinned_case_instance()
good = case_realizers(e, f, p, q, r_)
bad = case_realizers_literal(e, f, p, q, r_)
print("\ncase:", check_realizes(good, disj(p, q), r_).describe())
print("case with f applied to the left component:", check_realizes(bad, disj(p, q), r_).describe())
