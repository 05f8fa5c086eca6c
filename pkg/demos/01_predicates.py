"""Predicates as upward-closed relations, and what the connectives build from them.

Run with ``python3 demos/01_predicates.py``.
"""
from dsttripos import FALSITY, TRUTH, conj, disj, impl, mk_pred, show
from dsttripos.errors import NotUpwardClosed
from dsttripos.syntax import describe_pred

F = frozenset

# P: one positive value 1 and one negative value 9. Offering {1} defeats 9.
P = mk_pred(F({1}), F({9}), {(F({1}), 9)})
print("P")
print(describe_pred(P))

# Relations must be upward closed in the positive argument.
try:
    mk_pred(F({1}), F({9}), {(F(), 9)})
except NotUpwardClosed as exc:
    print("\nrejected:", exc)

# Conjunction tags each side; the opponent picks which component to attack.
Q = mk_pred(F({2}), F({8}), {(F({2}), 8)})
print("\nP and Q")
print(describe_pred(conj(P, Q)))

print("\nP or Q: negative carrier", show(F(disj(P, Q).minus.elements())))

# Implication is computed pointwise; its carriers are sized, not listed.
pq = impl(P, Q)
print(f"\nP -> Q: {pq.plus.size} positive codes, {pq.minus.size} negative points")
print("closure violation:", pq.closure_violation())

print("\ntruth has", TRUTH.minus.size, "negative points; falsity has", FALSITY.minus.size)
