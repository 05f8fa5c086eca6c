"""Natural-deduction terms, their type checker, and realizer extraction."""
from dsttripos import check_realizes, compile_proof, disj, infer, mk_pred, point, type_check
from dsttripos import proofc as PC
from dsttripos.syntax import show_proof

F = frozenset
p = point(mk_pred(F({1}), F({9}), {(F({1}), 9)}))
q = point(mk_pred(F({2}), F({8}), {(F({2}), 8)}))
r = point(mk_pred(F({3}), F({7}), ()))

t = PC.swap(p, q)
print(show_proof(t)[:60], "...")
seq = infer(t)
print("checks:", check_realizes(compile_proof(t), seq.ante, seq.cons).describe())

d = PC.distributivity(p, q, r)
seq = infer(d)
print("\ndistributivity compiles and checks:",
      check_realizes(compile_proof(d), seq.ante, seq.cons).describe())

bad = PC.AndE1(PC.Hyp(disj(p, q)))
print("\nill-typed:", type_check(bad).describe())
