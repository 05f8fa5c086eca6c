"""Quantifiers along a map of index sets, their transposes, and Beck-Chevalley."""
import random

from dsttripos import (
    FiniteMap, IndexedPred, beck_chevalley, check_realizes, exists_along, forall_along,
    forall_transpose, id_realizer, mk_pred, reindex,
)
from dsttripos.generators import random_family, random_square
from dsttripos.syntax import describe_pred

F = frozenset
P = mk_pred(F({1}), F({9}), {(F({1}), 9)})
Q = mk_pred(F({1, 2}), F({8}), {(F({1}), 8), (F({1, 2}), 8)})

phi = IndexedPred.from_dict({"a": P, "b": Q})
u = FiniteMap.make(["a", "b"], ["s"], {"a": "s", "b": "s"})

print("forall along u, fiber s")
print(describe_pred(forall_along(u, phi)["s"]))
print("\nexists along u, fiber s: negative carrier of size", exists_along(u, phi)["s"].minus.size)

# Transposing the identity on u* psi gives the unit psi |- forall_u u* psi.
psi = IndexedPred.from_dict({"s": P})
upsi = reindex(u, psi)
unit = forall_transpose("up", id_realizer(upsi), u, upsi, psi)
print("\nunit:", check_realizes(unit, psi, forall_along(u, upsi)).describe())

print()
rng = random.Random(7)
for _ in range(3):
    sq = random_square(rng, 3)
    fam = random_family(rng, sq.u.dom, max_plus=2, max_minus=2)
    for which in ("forall", "exists"):
        print(beck_chevalley(sq, fam, which).describe())
