"""A sequent-style proof-term calculus and its compiler to realizer pairs.

Every node proves one sequent ``ante |- cons`` between families over the
same index.  :func:`infer` computes that sequent (raising :class:`IllTyped`
at the first bad node) and :func:`compile_proof` maps each rule to exactly
one realizer construction.

Rules::

    hyp phi                           phi |- phi
    truthI phi                        phi |- true
    exFalso (s: chi |- false) psi     chi |- psi
    andI (s: chi |- p) (t: chi |- q)  chi |- p and q
    andE1 (s: chi |- p and q)         chi |- p          (andE2 likewise)
    orI1 (s: chi |- p) q              chi |- p or q     (orI2 likewise)
    orE (s: p |- r) (t: q |- r)       p or q |- r
    impI (s: chi and p |- q)          chi |- p -> q
    impE (s: chi |- p -> q) (t: chi |- p)   chi |- q
    cut (s: phi |- chi) (t: chi |- psi)     phi |- psi
    forallI u psi (s: u*psi |- phi)   psi |- forall_u phi
    forallE u phi (s: psi |- forall_u phi)  u*psi |- phi
    existsE u psi (s: phi |- u*psi)   exists_u phi |- psi
    existsI u phi (s: exists_u phi |- psi)  phi |- u*psi
    reindex u (s: phi |- psi)         u*phi |- u*psi
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import connectives as C
from . import quantifiers as Q
from .checker import check_realizes
from .errors import CheckFailed, IllTyped, TriposError
from .predicates import FiniteMap, IndexedPred, as_family, reindex
from .realizers import RealizerPair


class Sequent(NamedTuple):
    ante: IndexedPred
    cons: IndexedPred


class ProofTerm:
    """Base class of proof-term nodes."""

    rule = "?"

    def children(self) -> tuple:
        return ()


@dataclass(frozen=True)
class Hyp(ProofTerm):
    phi: IndexedPred
    rule = "hyp"


@dataclass(frozen=True)
class TruthI(ProofTerm):
    phi: IndexedPred
    rule = "truthI"


@dataclass(frozen=True)
class ExFalso(ProofTerm):
    premise: ProofTerm
    psi: IndexedPred
    rule = "exFalso"

    def children(self):
        return (self.premise,)


@dataclass(frozen=True)
class AndI(ProofTerm):
    left: ProofTerm
    right: ProofTerm
    rule = "andI"

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class AndE1(ProofTerm):
    premise: ProofTerm
    rule = "andE1"

    def children(self):
        return (self.premise,)


@dataclass(frozen=True)
class AndE2(ProofTerm):
    premise: ProofTerm
    rule = "andE2"

    def children(self):
        return (self.premise,)


@dataclass(frozen=True)
class OrI1(ProofTerm):
    premise: ProofTerm
    other: IndexedPred
    rule = "orI1"

    def children(self):
        return (self.premise,)


@dataclass(frozen=True)
class OrI2(ProofTerm):
    premise: ProofTerm
    other: IndexedPred
    rule = "orI2"

    def children(self):
        return (self.premise,)


@dataclass(frozen=True)
class OrE(ProofTerm):
    left: ProofTerm
    right: ProofTerm
    rule = "orE"

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class ImpI(ProofTerm):
    premise: ProofTerm
    rule = "impI"

    def children(self):
        return (self.premise,)


@dataclass(frozen=True)
class ImpE(ProofTerm):
    fun: ProofTerm
    arg: ProofTerm
    rule = "impE"

    def children(self):
        return (self.fun, self.arg)


@dataclass(frozen=True)
class Cut(ProofTerm):
    first: ProofTerm
    second: ProofTerm
    rule = "cut"

    def children(self):
        return (self.first, self.second)


@dataclass(frozen=True)
class ForallI(ProofTerm):
    u: FiniteMap
    psi: IndexedPred
    premise: ProofTerm
    rule = "forallI"

    def children(self):
        return (self.premise,)


@dataclass(frozen=True)
class ForallE(ProofTerm):
    u: FiniteMap
    phi: IndexedPred
    premise: ProofTerm
    rule = "forallE"

    def children(self):
        return (self.premise,)


@dataclass(frozen=True)
class ExistsI(ProofTerm):
    u: FiniteMap
    phi: IndexedPred
    premise: ProofTerm
    rule = "existsI"

    def children(self):
        return (self.premise,)


@dataclass(frozen=True)
class ExistsE(ProofTerm):
    u: FiniteMap
    psi: IndexedPred
    premise: ProofTerm
    rule = "existsE"

    def children(self):
        return (self.premise,)


@dataclass(frozen=True)
class Reindex(ProofTerm):
    u: FiniteMap
    premise: ProofTerm
    rule = "reindex"

    def children(self):
        return (self.premise,)


# ---------------------------------------------------------------------------
# typing


def _fail(node, reason):
    raise IllTyped(node, reason)


def _same(node, got, want, what):
    if got != want:
        _fail(node, f"mismatch in {what}")


def _split(node, family, cls, what):
    parts = C.split(family, cls)
    if parts is None:
        _fail(node, f"{what} is not a {cls.__name__.lower()}")
    return parts


def _index_of(node, u: FiniteMap, family: IndexedPred, side: str):
    labels = u.dom if side == "dom" else u.cod
    if set(labels) != set(family.index):
        _fail(node, f"map {side} {labels} does not match index {family.index}")


def infer(t: ProofTerm) -> Sequent:
    """The sequent proved by ``t``."""
    if isinstance(t, Hyp):
        return Sequent(t.phi, t.phi)
    if isinstance(t, TruthI):
        return Sequent(t.phi, C.top(t.phi.index))
    if isinstance(t, ExFalso):
        s = infer(t.premise)
        _same(t, s.cons, C.bottom(s.cons.index), "premise conclusion (expected false)")
        _same(t, t.psi.index, s.ante.index, "index of the conclusion")
        return Sequent(s.ante, t.psi)
    if isinstance(t, AndI):
        s, r = infer(t.left), infer(t.right)
        _same(t, s.ante, r.ante, "antecedents of the two premises")
        return Sequent(s.ante, C.conj(s.cons, r.cons))
    if isinstance(t, (AndE1, AndE2)):
        s = infer(t.premise)
        p, q = _split(t, s.cons, C.Conj, "premise conclusion")
        return Sequent(s.ante, p if isinstance(t, AndE1) else q)
    if isinstance(t, (OrI1, OrI2)):
        s = infer(t.premise)
        _same(t, t.other.index, s.cons.index, "index of the added disjunct")
        if isinstance(t, OrI1):
            return Sequent(s.ante, C.disj(s.cons, t.other))
        return Sequent(s.ante, C.disj(t.other, s.cons))
    if isinstance(t, OrE):
        s, r = infer(t.left), infer(t.right)
        _same(t, s.cons, r.cons, "conclusions of the two cases")
        return Sequent(C.disj(s.ante, r.ante), s.cons)
    if isinstance(t, ImpI):
        s = infer(t.premise)
        chi, p = _split(t, s.ante, C.Conj, "premise antecedent")
        return Sequent(chi, C.impl(p, s.cons))
    if isinstance(t, ImpE):
        s, r = infer(t.fun), infer(t.arg)
        p, q = _split(t, s.cons, C.Impl, "function conclusion")
        _same(t, r.ante, s.ante, "antecedents of function and argument")
        _same(t, r.cons, p, "argument conclusion")
        return Sequent(s.ante, q)
    if isinstance(t, Cut):
        s, r = infer(t.first), infer(t.second)
        _same(t, s.cons, r.ante, "cut formula")
        return Sequent(s.ante, r.cons)
    if isinstance(t, ForallI):
        s = infer(t.premise)
        _index_of(t, t.u, t.psi, "cod")
        _index_of(t, t.u, s.cons, "dom")
        _same(t, s.ante, reindex(t.u, t.psi), "premise antecedent (expected u*psi)")
        return Sequent(t.psi, Q.forall_along(t.u, s.cons))
    if isinstance(t, ForallE):
        s = infer(t.premise)
        _index_of(t, t.u, t.phi, "dom")
        _index_of(t, t.u, s.ante, "cod")
        _same(t, s.cons, Q.forall_along(t.u, t.phi), "premise conclusion (expected forall)")
        return Sequent(reindex(t.u, s.ante), t.phi)
    if isinstance(t, ExistsE):
        s = infer(t.premise)
        _index_of(t, t.u, t.psi, "cod")
        _index_of(t, t.u, s.ante, "dom")
        _same(t, s.cons, reindex(t.u, t.psi), "premise conclusion (expected u*psi)")
        return Sequent(Q.exists_along(t.u, s.ante), t.psi)
    if isinstance(t, ExistsI):
        s = infer(t.premise)
        _index_of(t, t.u, t.phi, "dom")
        _index_of(t, t.u, s.ante, "cod")
        _same(t, s.ante, Q.exists_along(t.u, t.phi), "premise antecedent (expected exists)")
        return Sequent(t.phi, reindex(t.u, s.cons))
    if isinstance(t, Reindex):
        s = infer(t.premise)
        _index_of(t, t.u, s.ante, "cod")
        return Sequent(reindex(t.u, s.ante), reindex(t.u, s.cons))
    raise IllTyped(t, "unknown proof-term node")


@dataclass(frozen=True)
class TypeReport:
    ok: bool
    node: Optional[ProofTerm] = None
    reason: str = ""

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "well-typed"
        return f"ill-typed at {self.node.rule}: {self.reason}"


def type_check(t: ProofTerm) -> TypeReport:
    try:
        infer(t)
    except IllTyped as exc:
        return TypeReport(False, exc.node, exc.reason)
    except TriposError as exc:
        return TypeReport(False, t, str(exc))
    return TypeReport(True)


# ---------------------------------------------------------------------------
# compilation


def _compile(t: ProofTerm) -> tuple:
    """``(realizer, sequent)`` for a well-typed term."""
    seq = infer(t)
    if isinstance(t, Hyp):
        return C.id_realizer(t.phi), seq
    if isinstance(t, TruthI):
        return C.truth_intro(t.phi), seq
    if isinstance(t, ExFalso):
        r, s = _compile(t.premise)
        return C.compose_realizers(r, C.ex_falso(t.psi), s.ante, s.cons, t.psi,
                                   check=False), seq
    if isinstance(t, AndI):
        (r1, s1), (r2, _) = _compile(t.left), _compile(t.right)
        return C.pair_realizers(r1, r2, s1.ante, s1.cons, infer(t.right).cons,
                                check=False), seq
    if isinstance(t, (AndE1, AndE2)):
        r, s = _compile(t.premise)
        p, q = C.split(s.cons, C.Conj)
        side = "left" if isinstance(t, AndE1) else "right"
        return C.compose_realizers(r, C.proj_realizer(side, p, q), s.ante, s.cons,
                                   seq.cons, check=False), seq
    if isinstance(t, (OrI1, OrI2)):
        r, s = _compile(t.premise)
        p, q = C.split(seq.cons, C.Disj)
        side = "left" if isinstance(t, OrI1) else "right"
        return C.compose_realizers(r, C.inj_realizer(side, p, q), s.ante, s.cons,
                                   seq.cons, check=False), seq
    if isinstance(t, OrE):
        (r1, s1), (r2, s2) = _compile(t.left), _compile(t.right)
        return C.case_realizers(r1, r2, s1.ante, s2.ante, s1.cons, check=False), seq
    if isinstance(t, ImpI):
        r, s = _compile(t.premise)
        chi, p = C.split(s.ante, C.Conj)
        return C.curry(r, chi, p, s.cons, check=False), seq
    if isinstance(t, ImpE):
        (rf, sf), (ra, sa) = _compile(t.fun), _compile(t.arg)
        chi = sf.ante
        p, q = C.split(sf.cons, C.Impl)
        paired = C.pair_realizers(C.id_realizer(chi), ra, chi, chi, p, check=False)
        applied = C.uncurry(rf, chi, p, q, check=False)
        return C.compose_realizers(paired, applied, chi, C.conj(chi, p), q, check=False), seq
    if isinstance(t, Cut):
        (r1, s1), (r2, s2) = _compile(t.first), _compile(t.second)
        return C.compose_realizers(r1, r2, s1.ante, s1.cons, s2.cons, check=False), seq
    if isinstance(t, ForallI):
        r, s = _compile(t.premise)
        return Q.forall_transpose("up", r, t.u, s.cons, t.psi, check=False), seq
    if isinstance(t, ForallE):
        r, s = _compile(t.premise)
        return Q.forall_transpose("down", r, t.u, t.phi, s.ante, check=False), seq
    if isinstance(t, ExistsE):
        r, s = _compile(t.premise)
        return Q.exists_transpose("up", r, t.u, s.ante, t.psi, check=False), seq
    if isinstance(t, ExistsI):
        r, s = _compile(t.premise)
        return Q.exists_transpose("down", r, t.u, t.phi, s.cons, check=False), seq
    if isinstance(t, Reindex):
        r, s = _compile(t.premise)
        return Q.reindex_realizer(r, t.u, s.ante, s.cons), seq
    raise IllTyped(t, "unknown proof-term node")


def compile_proof(t: ProofTerm, verify: bool = True) -> RealizerPair:
    """Compile a derivation; with ``verify`` the result is re-checked."""
    report = type_check(t)
    if not report:
        raise IllTyped(report.node, report.reason)
    r, seq = _compile(t)
    if verify:
        v = check_realizes(r, seq.ante, seq.cons)
        if not v:
            raise CheckFailed(f"compiled realizer does not check: {v.describe()}",
                              v.counterexample)
    return r


# ---------------------------------------------------------------------------
# standard derivations


def swap(p, q) -> ProofTerm:
    """``p and q |- q and p``."""
    h = Hyp(C.conj(as_family(p), as_family(q)))
    return AndI(AndE2(h), AndE1(h))


def distributivity(p, q, r) -> ProofTerm:
    """``p and (q or r) |- (p and q) or (p and r)``."""
    p, q, r = as_family(p), as_family(q), as_family(r)
    pq, pr = C.conj(p, q), C.conj(p, r)
    to_left = ImpI(OrI1(swap(q, p), pr))
    to_right = ImpI(OrI2(swap(r, p), pq))
    chi = Hyp(C.conj(p, C.disj(q, r)))
    return ImpE(Cut(AndE2(chi), OrE(to_left, to_right)), AndE1(chi))


def distributivity_converse(p, q, r) -> ProofTerm:
    """``(p and q) or (p and r) |- p and (q or r)``."""
    p, q, r = as_family(p), as_family(q), as_family(r)
    hq, hr = Hyp(C.conj(p, q)), Hyp(C.conj(p, r))
    left = AndI(AndE1(hq), OrI1(AndE2(hq), r))
    right = AndI(AndE1(hr), OrI2(AndE2(hr), q))
    return OrE(left, right)


def frobenius(u: FiniteMap, phi: IndexedPred, psi: IndexedPred) -> ProofTerm:
    """``exists_u(phi and u*psi) |- (exists_u phi) and psi``."""
    upsi = reindex(u, psi)
    ex = Q.exists_along(u, phi)
    h = Hyp(C.conj(phi, upsi))
    unit = ExistsI(u, phi, Hyp(ex))
    return ExistsE(u, C.conj(ex, psi), AndI(Cut(AndE1(h), unit), AndE2(h)))


def frobenius_converse(u: FiniteMap, phi: IndexedPred, psi: IndexedPred) -> ProofTerm:
    """``(exists_u phi) and psi |- exists_u(phi and u*psi)``."""
    upsi = reindex(u, psi)
    body = C.conj(phi, upsi)
    target = Q.exists_along(u, body)
    unit = ExistsI(u, body, Hyp(target))
    curried = ExistsE(u, C.impl(psi, target), ImpI(unit))
    chi = Hyp(C.conj(Q.exists_along(u, phi), psi))
    return ImpE(Cut(AndE1(chi), curried), AndE2(chi))
