import random

import pytest

from dsttripos import connectives as C
from dsttripos import proofc as PC
from dsttripos import quantifiers as QF
from dsttripos.checker import check_realizes
from dsttripos.errors import IllTyped
from dsttripos.generators import random_family, random_map, random_pred
from dsttripos.predicates import FiniteMap, IndexedPred, point, reindex


@pytest.fixture
def fP(P):
    return point(P)


@pytest.fixture
def fQ(Q):
    return point(Q)


def test_hyp_compiles_to_identity(fP):
    assert PC.compile_proof(PC.Hyp(fP)) == C.id_realizer(fP)
    assert PC.type_check(PC.Hyp(fP)).describe() == "well-typed"


def test_and_intro_then_elim(fP):
    t = PC.AndE1(PC.AndI(PC.Hyp(fP), PC.Hyp(fP)))
    seq = PC.infer(t)
    assert seq.ante == fP and seq.cons == fP
    assert check_realizes(PC.compile_proof(t), fP, fP)


def test_swap(fP, fQ):
    t = PC.swap(fP, fQ)
    seq = PC.infer(t)
    assert seq.cons == C.conj(fQ, fP)
    assert check_realizes(PC.compile_proof(t), seq.ante, seq.cons)


def test_modus_ponens(fP, fQ):
    chi = C.conj(C.conj(fP, fQ), fP)
    t = PC.ImpE(PC.ImpI(PC.AndE2(PC.Hyp(chi))), PC.AndE1(PC.Hyp(C.conj(fP, fQ))))
    seq = PC.infer(t)
    assert seq.cons == fP
    assert check_realizes(PC.compile_proof(t), seq.ante, seq.cons)


def test_and_elim_on_disjunction_is_ill_typed(fP, fQ):
    t = PC.AndE1(PC.Hyp(C.disj(fP, fQ)))
    rep = PC.type_check(t)
    assert not rep and rep.node is t
    assert "not a conj" in rep.describe()
    with pytest.raises(IllTyped) as info:
        PC.compile_proof(t)
    assert info.value.node is t


def test_forall_intro_with_wrong_map(fP):
    u = FiniteMap.make(["a", "b"], ["*"], {"a": "*", "b": "*"})
    t = PC.ForallI(u, fP, PC.Hyp(fP))
    rep = PC.type_check(t)
    assert not rep and rep.node is t and "dom" in rep.reason


def test_first_failing_node_is_reported(fP, fQ):
    inner = PC.AndE2(PC.Hyp(fP))
    t = PC.AndI(PC.Hyp(fP), inner)
    assert PC.type_check(t).node is inner
    bad_cut = PC.Cut(PC.Hyp(fP), PC.Hyp(fQ))
    assert "cut formula" in PC.type_check(bad_cut).reason


def test_or_elim_and_ex_falso(fP, fQ):
    t = PC.OrE(PC.OrI2(PC.Hyp(fP), fQ), PC.OrI1(PC.Hyp(fQ), fP))
    seq = PC.infer(t)
    assert seq.ante == C.disj(fP, fQ) and seq.cons == C.disj(fQ, fP)
    assert check_realizes(PC.compile_proof(t), seq.ante, seq.cons)
    t = PC.ExFalso(PC.Hyp(C.bottom(fP.index)), fQ)
    assert check_realizes(PC.compile_proof(t), C.bottom(fP.index), fQ)
    assert not PC.type_check(PC.ExFalso(PC.Hyp(fP), fQ))


def test_quantifier_rules(fP, fQ):
    u = FiniteMap.make(["a", "b"], ["*"], {"a": "*", "b": "*"})
    phi = IndexedPred.from_dict({"a": fP["*"], "b": fQ["*"]})
    psi = fP
    upsi = reindex(u, psi)
    # exists_u(u* psi) |- psi through existsE of the identity on u* psi
    t = PC.ExistsE(u, psi, PC.Hyp(upsi))
    seq = PC.infer(t)
    assert seq.ante == QF.exists_along(u, upsi) and seq.cons == psi
    assert check_realizes(PC.compile_proof(t), seq.ante, seq.cons)
    # psi |- forall_u(u* psi)
    t = PC.ForallI(u, psi, PC.Hyp(upsi))
    assert check_realizes(PC.compile_proof(t), psi, QF.forall_along(u, upsi))
    # forallE undoes it
    back = PC.ForallE(u, upsi, t)
    assert PC.infer(back) == PC.Sequent(upsi, upsi)
    assert check_realizes(PC.compile_proof(back), upsi, upsi)
    # existsI of the identity on exists_u phi
    ex = QF.exists_along(u, phi)
    t = PC.ExistsI(u, phi, PC.Hyp(ex))
    assert check_realizes(PC.compile_proof(t), phi, reindex(u, ex))
    t = PC.Reindex(u, PC.Hyp(psi))
    assert check_realizes(PC.compile_proof(t), upsi, upsi)


@pytest.mark.parametrize("seed", range(12))
def test_distributivity_compiles(seed):
    rng = random.Random(seed)
    p, q, r = (point(random_pred(rng, 2, 2)) for _ in range(3))
    for t in (PC.distributivity(p, q, r), PC.distributivity_converse(p, q, r)):
        seq = PC.infer(t)
        assert check_realizes(PC.compile_proof(t, verify=False), seq.ante, seq.cons)
    assert PC.infer(PC.distributivity(p, q, r)).cons == C.disj(C.conj(p, q), C.conj(p, r))


@pytest.mark.parametrize("seed", range(8))
def test_frobenius_compiles(seed):
    rng = random.Random(seed)
    I = [f"i{n}" for n in range(rng.randint(0, 3))]
    J = [f"j{n}" for n in range(rng.randint(1, 3))]
    u = random_map(rng, I, J)
    phi = random_family(rng, I, max_plus=1, max_minus=1)
    psi = random_family(rng, J, max_plus=1, max_minus=1)
    for t in (PC.frobenius(u, phi, psi), PC.frobenius_converse(u, phi, psi)):
        seq = PC.infer(t)
        assert check_realizes(PC.compile_proof(t, verify=False), seq.ante, seq.cons)


@pytest.mark.parametrize("seed", range(10))
def test_cut_is_composition(seed):
    rng = random.Random(seed)
    p, q = point(random_pred(rng, 2, 2)), point(random_pred(rng, 2, 2))
    s, t = PC.swap(p, q), PC.AndE1(PC.Hyp(C.conj(q, p)))
    direct = PC.compile_proof(PC.Cut(s, t))
    composed = C.compose_realizers(PC.compile_proof(s), PC.compile_proof(t),
                                   C.conj(p, q), C.conj(q, p), q)
    assert direct == composed
