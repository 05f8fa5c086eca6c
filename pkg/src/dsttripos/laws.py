"""The law battery: every invariant of the library, run on a corpus plus
seeded random instances.

Each law gets its own random stream derived from ``(seed, law name)``, so
adding or reordering laws never changes the instances another law sees, and
two runs with the same inputs produce byte-identical reports.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from . import connectives as C
from . import proofc as PC
from . import quantifiers as Q
from .checker import Verdict, check_realizes, decide_entails, greatest_realizer
from .errors import BudgetExceeded, CheckFailed, TriposError
from .generators import random_family, random_labels, random_map, random_pred, random_square
from .predicates import FiniteMap, Pred, as_family, mk_pred, point, reindex, upward_close
from .realizers import RealizerPair, build
from .values import (
    EMPTY,
    Star,
    apply_value,
    bracket,
    canonical,
    from_pair,
    show,
    show_safe,
    tabulate,
    to_pair,
)


@dataclass(frozen=True)
class Sizes:
    """Instance counts and carrier bounds for the randomized laws."""
    n: int = 12  # instances per law
    carrier: int = 3  # connective laws
    quant_carrier: int = 2  # quantifier transposes and Beck-Chevalley
    index: int = 3
    dist_carrier: int = 2
    frob_carrier: int = 1
    tries: int = 30  # random draws before falling back to a structured instance


@dataclass
class LawResult:
    name: str
    passed: bool = True
    checked: int = 0
    detail: str = ""
    skipped: int = 0

    def fail(self, detail: str):
        if self.passed:
            self.passed, self.detail = False, detail

    def line(self) -> str:
        extra = f", {self.skipped} skipped" if self.skipped else ""
        out = f"{'PASS' if self.passed else 'FAIL'}  {self.name} ({self.checked} checked{extra})"
        return out + (f"\n      {self.detail}" if self.detail else "")


@dataclass
class Report:
    seed: object
    corpus_size: int
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name) -> LawResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def render(self) -> str:
        lines = [f"law suite: seed {self.seed}, {self.corpus_size} corpus entries"]
        lines += [r.line() for r in self.results]
        failed = sum(not r.passed for r in self.results)
        lines.append(f"{len(self.results) - failed} passed, {failed} failed")
        return "\n".join(lines) + "\n"


@dataclass
class Corpus:
    preds: dict = field(default_factory=dict)
    families: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)

    @classmethod
    def from_env(cls, env) -> "Corpus":
        return cls(dict(env.preds), dict(env.families), dict(env.maps))

    def __len__(self):
        return len(self.preds) + len(self.families) + len(self.maps)

    def pred_list(self) -> list:
        return [self.preds[k] for k in sorted(self.preds)]


# ---------------------------------------------------------------------------
# helpers


def _verdict(r, phi, psi) -> Verdict:
    return check_realizes(r, phi, psi)


def _expect(res: LawResult, r: RealizerPair, phi, psi, what: str):
    """Record one realizer check on ``res``."""
    res.checked += 1
    try:
        v = _verdict(r, phi, psi)
    except TriposError as exc:
        res.fail(f"{what}: ill-formed realizer: {exc}")
        return False
    if not v:
        res.fail(f"{what}: {v.describe()}")
    return bool(v)


def _decided(phi, psi):
    try:
        return decide_entails(phi, psi)
    except BudgetExceeded:
        return None


def _pred(rng, k):
    return random_pred(rng, k, k)


def _entailing(rng, sizes, make, fallback):
    """``make(rng)`` returns ``(instance, phi, psi)``; redraw until ``phi |- psi``
    has a realizer, else use ``fallback(rng)`` which always entails."""
    for _ in range(sizes.tries):
        inst, phi, psi = make(rng)
        r = _decided(phi, psi)
        if r is not None:
            return inst, r
    inst, phi, psi = fallback(rng)
    r = _decided(phi, psi)
    if r is None:
        raise CheckFailed("fallback instance does not entail")
    return inst, r


def _pstr(p) -> str:
    from .syntax import show_term
    try:
        return show_term(p)
    except TriposError:
        return repr(p)


def _random_value(rng, depth=2):
    k = rng.randrange(3 if depth else 1)
    if k == 0:
        return rng.randrange(4)
    if k == 1:
        return (_random_value(rng, depth - 1), _random_value(rng, depth - 1))
    return frozenset(_random_value(rng, depth - 1) for _ in range(rng.randrange(3)))


# ---------------------------------------------------------------------------
# values


def law_value_roundtrip(rng, sizes, corpus):
    from .syntax import parse_value
    res = LawResult("values.print-parse-roundtrip")
    for _ in range(sizes.n * 5):
        v = _random_value(rng, 3)
        res.checked += 1
        if parse_value(show(v)) != v:
            res.fail(f"{show(v)} does not read back")
    return res


def law_exp_iso(rng, sizes, corpus):
    res = LawResult("values.exp-iso-roundtrip")
    for _ in range(sizes.n * 5):
        xs = frozenset(rng.sample(range(4), rng.randrange(4)))
        ys = frozenset(rng.sample(range(4), rng.randrange(4)))
        w = from_pair(xs, ys)
        res.checked += 1
        if to_pair(w) != (xs, ys) or from_pair(*to_pair(w)) != w:
            res.fail(f"round trip fails on {show(w)}")
        xs2 = xs | {rng.randrange(5)}
        if not (to_pair(from_pair(xs2, ys))[0] >= to_pair(w)[0] and from_pair(xs2, ys) >= w):
            res.fail(f"inclusion not preserved on {show(w)}")
    return res


def law_bracket_monotone(rng, sizes, corpus):
    res = LawResult("values.bracket-monotone")
    for _ in range(sizes.n * 5):
        keys = rng.sample(range(4), rng.randrange(1, 4))
        graphs = [tabulate(lambda k: frozenset(rng.sample(range(5), rng.randrange(3))), keys)
                  for _ in range(3)]
        small = frozenset(rng.sample(graphs, rng.randrange(3)))
        big = small | {rng.choice(graphs)}
        y = rng.choice(keys)
        res.checked += 1
        if not bracket(small, y) <= bracket(big, y):
            res.fail(f"{show(small)}[{y}] not below {show(big)}[{y}]")
    return res


def law_tabulate_apply(rng, sizes, corpus):
    res = LawResult("values.tabulate-then-apply")
    for _ in range(sizes.n * 5):
        xs = canonical(_random_value(rng, 2) for _ in range(rng.randrange(5)))
        h = {x: _random_value(rng, 1) for x in xs}
        g = tabulate(h.__getitem__, xs)
        res.checked += 1
        if any(apply_value(g, x) != h[x] for x in xs):
            res.fail(f"apply disagrees with the tabulated function on {show(g)}")
    return res


# ---------------------------------------------------------------------------
# predicates


def _closed_by_enumeration(p: Pred) -> bool:
    rel = p.table()
    stars = p.plusplus.elements()
    return all((a2, b) in rel for a, b in rel for a2 in stars if a <= a2)


def law_validation(rng, sizes, corpus):
    res = LawResult("predicates.validation-sound")
    preds = corpus.pred_list() + [_pred(rng, sizes.carrier) for _ in range(sizes.n * 3)]
    for p in preds:
        res.checked += 1
        if p.closure_violation() is not None or not _closed_by_enumeration(p):
            res.fail(f"{_pstr(p)} is not upward closed")
    return res


def law_upward_close(rng, sizes, corpus):
    res = LawResult("predicates.upward-close-is-closure")
    for _ in range(sizes.n * 3):
        p = _pred(rng, sizes.carrier)
        cells = sorted(((a, b) for a in p.plusplus.elements() for b in p.minus.elements()),
                       key=lambda ab: (show(ab[0]), show(ab[1])))
        s1 = {c for c in cells if rng.random() < 0.2}
        s2 = s1 | {c for c in cells if rng.random() < 0.2}
        c1, c2 = upward_close(p.plus.items, p.minus.items, s1), \
            upward_close(p.plus.items, p.minus.items, s2)
        res.checked += 1
        if not s1 <= c1.rel:
            res.fail("not extensive")
        elif not c1.rel <= c2.rel:
            res.fail("not monotone")
        elif upward_close(p.plus.items, p.minus.items, c1.rel) != c1:
            res.fail("not idempotent")
    return res


def law_reindex_functorial(rng, sizes, corpus):
    res = LawResult("predicates.reindex-functorial")
    for _ in range(sizes.n * 2):
        K = random_labels(rng, "k", 1, sizes.index)
        J = random_labels(rng, "j", 1, sizes.index)
        I = random_labels(rng, "i", 0, sizes.index)
        u, v = random_map(rng, I, J), random_map(rng, J, K)
        psi = random_family(rng, K, max_plus=2, max_minus=2)
        res.checked += 1
        if reindex(FiniteMap.identity(K), psi) != psi:
            res.fail("reindexing along an identity changes the family")
        elif reindex(u.then(v), psi) != reindex(u, reindex(v, psi)):
            res.fail(f"composite reindexing differs for u = {u}, v = {v}")
    for name in sorted(corpus.maps):
        u = corpus.maps[name]
        for fname in sorted(corpus.families):
            psi = corpus.families[fname]
            if set(psi.index) == set(u.cod):
                res.checked += 1
                back = reindex(u, psi)
                if any(back[i] != psi[u(i)] for i in u.dom):
                    res.fail(f"reindex({name}, {fname}) is not precomposition")
    return res


# ---------------------------------------------------------------------------
# connectives


def law_constructor_closure(rng, sizes, corpus):
    res = LawResult("connectives.constructor-closure")
    preds = corpus.pred_list() + [_pred(rng, sizes.carrier) for _ in range(sizes.n)]
    for p, q in zip(preds, preds[1:]):
        for op in (C.conj, C.disj, C.impl):
            res.checked += 1
            try:
                w = op(p, q).closure_violation()
            except BudgetExceeded:
                res.checked -= 1
                res.skipped += 1
                continue
            if w is not None:
                res.fail(f"{op.__name__}({_pstr(p)}, {_pstr(q)}) violates closure at {show_safe(w)}")
    return res


def _corpus_pairs(corpus):
    ps = corpus.pred_list()
    return list(combinations(ps, 2)) + [(p, p) for p in ps]


def law_identity(rng, sizes, corpus):
    res = LawResult("realizer.identity")
    fams = [as_family(p) for p in corpus.pred_list()] + \
        [corpus.families[k] for k in sorted(corpus.families)] + \
        [random_family(rng, random_labels(rng, "i", 1, 2), max_plus=sizes.carrier,
                       max_minus=sizes.carrier) for _ in range(sizes.n)]
    for phi in fams:
        _expect(res, C.id_realizer(phi), phi, phi, f"id on {_pstr(phi)}")
    return res


def law_projections(rng, sizes, corpus):
    res = LawResult("realizer.projections")
    pairs = _corpus_pairs(corpus) + [(_pred(rng, sizes.carrier), _pred(rng, sizes.carrier))
                                     for _ in range(sizes.n)]
    for p, q in pairs:
        _expect(res, C.proj_realizer("left", p, q), C.conj(p, q), p, "left projection")
        _expect(res, C.proj_realizer("right", p, q), C.conj(p, q), q, "right projection")
    return res


def law_injections(rng, sizes, corpus):
    res = LawResult("realizer.injections")
    pairs = _corpus_pairs(corpus) + [(_pred(rng, sizes.carrier), _pred(rng, sizes.carrier))
                                     for _ in range(sizes.n)]
    for p, q in pairs:
        _expect(res, C.inj_realizer("left", p, q), p, C.disj(p, q), "left injection")
        _expect(res, C.inj_realizer("right", p, q), q, C.disj(p, q), "right injection")
    return res


def law_truth_falsity(rng, sizes, corpus):
    res = LawResult("realizer.truth-intro-and-ex-falso")
    preds = corpus.pred_list() + [_pred(rng, sizes.carrier) for _ in range(sizes.n)]
    for p in preds:
        _expect(res, C.truth_intro(p), p, C.TRUTH, "truth intro")
        _expect(res, C.ex_falso(p), C.FALSITY, p, "ex falso")
    return res


def draw_compose(rng, sizes):
    """``(phi, chi, psi, e, f)`` with checking ``e: phi |- chi`` and ``f: chi |- psi``."""
    k = sizes.carrier

    def make(rng):
        phi, chi = _pred(rng, k), _pred(rng, k)
        return (phi, chi), phi, chi

    def fallback(rng):
        chi, x = _pred(rng, k), _pred(rng, k)
        return (C.Conj(chi, x), chi), C.Conj(chi, x), chi

    (phi, chi), e = _entailing(rng, sizes, make, fallback)

    def make2(rng):
        psi = _pred(rng, k)
        return psi, chi, psi

    def fallback2(rng):
        psi = C.Disj(chi, _pred(rng, k))
        return psi, chi, psi

    psi, f = _entailing(rng, sizes, make2, fallback2)
    return phi, chi, psi, e, f


def law_compose(rng, sizes, corpus):
    res = LawResult("realizer.composition")
    for _ in range(sizes.n):
        phi, chi, psi, e, f = draw_compose(rng, sizes)
        _expect(res, C.compose_realizers(e, f, phi, chi, psi), phi, psi, "composite")
    return res


def law_compose_units(rng, sizes, corpus):
    res = LawResult("realizer.composition-unit-and-associativity")
    for _ in range(sizes.n):
        phi, chi, psi, e, f = draw_compose(rng, sizes)
        _expect(res, C.compose_realizers(C.id_realizer(phi), e, phi, phi, chi), phi, chi,
                "id then e")
        _expect(res, C.compose_realizers(e, C.id_realizer(chi), phi, chi, chi), phi, chi,
                "e then id")
        g = _decided(psi, psi)
        left = C.compose_realizers(C.compose_realizers(e, f, phi, chi, psi), g, phi, psi, psi)
        right = C.compose_realizers(e, C.compose_realizers(f, g, chi, psi, psi), phi, chi, psi)
        _expect(res, left, phi, psi, "(e;f);g")
        _expect(res, right, phi, psi, "e;(f;g)")
    return res


def draw_pairing(rng, sizes):
    """``(r, p, q, e, f)`` with ``e: r |- p`` and ``f: r |- q``."""
    k = sizes.carrier
    r = _pred(rng, k)

    def make(rng):
        p = _pred(rng, k)
        return p, r, p

    def fallback(rng):
        p = C.Disj(r, _pred(rng, k))
        return p, r, p

    p, e = _entailing(rng, sizes, make, fallback)
    q, f = _entailing(rng, sizes, make, fallback)
    return r, p, q, e, f


def law_pairing(rng, sizes, corpus):
    res = LawResult("realizer.pairing")
    for p, q in _corpus_pairs(corpus):
        pq = C.conj(p, q)
        e, f = C.proj_realizer("left", p, q), C.proj_realizer("right", p, q)
        _expect(res, C.pair_realizers(e, f, pq, p, q), pq, pq, "pairing of projections")
    for _ in range(sizes.n):
        r, p, q, e, f = draw_pairing(rng, sizes)
        _expect(res, C.pair_realizers(e, f, r, p, q), r, C.conj(p, q), "pairing")
    return res


def draw_case(rng, sizes):
    """``(p, q, r, e, f)`` with ``e: p |- r`` and ``f: q |- r``."""
    k = sizes.carrier
    r = _pred(rng, k)

    def make(rng):
        p = _pred(rng, k)
        return p, p, r

    def fallback(rng):
        p = C.Conj(r, _pred(rng, k))
        return p, p, r

    p, e = _entailing(rng, sizes, make, fallback)
    q, f = _entailing(rng, sizes, make, fallback)
    return p, q, r, e, f


def law_case(rng, sizes, corpus, case=None):
    case = case or C.case_realizers
    res = LawResult("realizer.case")
    p, q, r, e, f = pinned_case_instance()
    try:
        _expect(res, case(e, f, p, q, r), C.disj(p, q), r, "case on the pinned instance")
    except TriposError as exc:
        res.checked += 1
        res.fail(f"case on the pinned instance: {exc}")
    for p, q in _corpus_pairs(corpus):
        pq = C.disj(p, q)
        e, f = C.inj_realizer("left", p, q), C.inj_realizer("right", p, q)
        try:
            r = case(e, f, p, q, pq)
        except TriposError as exc:
            res.checked += 1
            res.fail(str(exc))
            continue
        _expect(res, r, pq, pq, "case of injections")
    for _ in range(sizes.n):
        p, q, r, e, f = draw_case(rng, sizes)
        try:
            _expect(res, case(e, f, p, q, r), C.disj(p, q), r, "case")
        except TriposError as exc:
            res.checked += 1
            res.fail(f"case: {exc}")
    return res


def pinned_case_instance():
    """A small instance on which the ``e+(x) | f+(x)`` variant of case fails."""
    p = mk_pred(frozenset({1}), frozenset({9}), ())
    q = mk_pred(frozenset({1}), frozenset({9}), {(frozenset({1}), 9)})
    e = build(as_family(p), as_family(q), lambda x: EMPTY, lambda x, y: frozenset({9}))
    f = C.id_realizer(q)
    return p, q, q, e, f


def law_case_literal_rejected(rng, sizes, corpus):
    """The ``e+(x) | f+(x)`` variant must fail on the pinned instance."""
    res = LawResult("realizer.case-variant-rejected")
    p, q, r, e, f = pinned_case_instance()
    res.checked += 1
    v = check_realizes(C.case_realizers_literal(e, f, p, q, r), C.disj(p, q), r)
    if v:
        res.fail("the variant passed on the pinned instance")
        return res
    _, a, b = v.counterexample
    x, y = to_pair(a)
    res.detail = f"counterexample x = {show(x)}, y = {show(y)}, z = {show(b)}"
    caught = 0
    for _ in range(sizes.n):
        inst = draw_case(rng, sizes)
        pp, qq, rr, ee, ff = inst
        res.checked += 1
        try:
            ok = check_realizes(C.case_realizers_literal(ee, ff, pp, qq, rr), C.disj(pp, qq), rr)
        except TriposError:
            ok = False  # f+ applied outside its domain
        caught += not ok
    res.detail += f"; variant also rejected on {caught} of {sizes.n} random instances"
    return res


def draw_curry(rng, sizes):
    """``(r, p, q, e)`` with ``e: r and p |- q``."""
    k = sizes.carrier

    def make(rng):
        r, p, q = _pred(rng, k), _pred(rng, k), _pred(rng, k)
        return (r, p, q), C.Conj(r, p), q

    def fallback(rng):
        r, p = _pred(rng, k), _pred(rng, k)
        return (r, p, p), C.Conj(r, p), p

    (r, p, q), e = _entailing(rng, sizes, make, fallback)
    return r, p, q, e


def law_curry(rng, sizes, corpus):
    res = LawResult("realizer.curry")
    for _ in range(sizes.n):
        r, p, q, e = draw_curry(rng, sizes)
        _expect(res, C.curry(e, r, p, q), r, C.Impl(p, q), "curry")
    for p in corpus.pred_list():
        e = C.proj_realizer("right", C.TRUTH, p)
        _expect(res, C.curry(e, C.TRUTH, p, p), C.TRUTH, C.Impl(p, p), "curried projection")
    return res


def law_uncurry(rng, sizes, corpus):
    res = LawResult("realizer.uncurry")
    for _ in range(sizes.n):
        r, p, q, e = draw_curry(rng, sizes)
        g = C.curry(e, r, p, q)
        _expect(res, C.uncurry(g, r, p, q), C.Conj(r, p), q, "uncurry")
    return res


def law_curry_adjunction(rng, sizes, corpus):
    """Both transposes preserve realizers, and the round trips re-check."""
    res = LawResult("connectives.curry-adjunction")
    for _ in range(sizes.n):
        r, p, q, e = draw_curry(rng, sizes)
        g = C.curry(e, r, p, q)
        if not _expect(res, g, r, C.Impl(p, q), "curry(e)"):
            continue
        h = C.uncurry(g, r, p, q)
        _expect(res, h, C.Conj(r, p), q, "uncurry(curry(e))")
        _expect(res, C.curry(h, r, p, q), r, C.Impl(p, q), "curry(uncurry(curry(e)))")
        # a realizer of r |- p -> q that is not itself a curried one
        s = _decided(r, r)
        g2 = C.compose_realizers(s, g, r, r, C.Impl(p, q))
        _expect(res, C.uncurry(g2, r, p, q), C.Conj(r, p), q, "uncurry of a composite")
    return res


# ---------------------------------------------------------------------------
# quantifiers


def draw_quant(rng, sizes):
    I = random_labels(rng, "i", 0, sizes.index)
    J = random_labels(rng, "j", 1, sizes.index)
    u = random_map(rng, I, J)
    k = sizes.quant_carrier
    return u, random_family(rng, I, max_plus=k, max_minus=k), \
        random_family(rng, J, max_plus=k, max_minus=k)


def _transpose_inputs(rng, sizes, lhs, rhs, fallback):
    """``(u, phi, psi, r)`` with ``r: lhs(u, phi, psi) |- rhs(u, phi, psi)``."""
    for _ in range(sizes.tries):
        u, phi, psi = draw_quant(rng, sizes)
        r = _decided(lhs(u, phi, psi), rhs(u, phi, psi))
        if r is not None:
            return u, phi, psi, r
    u, phi, _ = draw_quant(rng, sizes)
    psi = fallback(u, phi)
    return u, phi, psi, _decided(lhs(u, phi, psi), rhs(u, phi, psi))


_TRANSPOSES = {
    # name: (transpose, direction, input lhs, input rhs, output lhs, output rhs, fallback psi)
    "forall.transpose-down": (Q.forall_transpose, "down",
                              lambda u, f, s: s, lambda u, f, s: Q.forall_along(u, f),
                              lambda u, f, s: reindex(u, s), lambda u, f, s: f,
                              Q.forall_along),
    "forall.transpose-up": (Q.forall_transpose, "up",
                            lambda u, f, s: reindex(u, s), lambda u, f, s: f,
                            lambda u, f, s: s, lambda u, f, s: Q.forall_along(u, f),
                            Q.forall_along),
    "exists.transpose-down": (Q.exists_transpose, "down",
                              lambda u, f, s: Q.exists_along(u, f), lambda u, f, s: s,
                              lambda u, f, s: f, lambda u, f, s: reindex(u, s),
                              Q.exists_along),
    "exists.transpose-up": (Q.exists_transpose, "up",
                            lambda u, f, s: f, lambda u, f, s: reindex(u, s),
                            lambda u, f, s: Q.exists_along(u, f), lambda u, f, s: s,
                            Q.exists_along),
}


def transpose_law(name):
    fn, direction, in_l, in_r, out_l, out_r, fallback = _TRANSPOSES[name]
    back = "up" if direction == "down" else "down"

    def law(rng, sizes, corpus):
        res = LawResult(name)
        for _ in range(sizes.n):
            u, phi, psi, r = _transpose_inputs(rng, sizes, in_l, in_r, fallback)
            t = fn(direction, r, u, phi, psi)
            if _expect(res, t, out_l(u, phi, psi), out_r(u, phi, psi), "transpose"):
                _expect(res, fn(back, t, u, phi, psi), in_l(u, phi, psi), in_r(u, phi, psi),
                        "round trip")
        for uname in sorted(corpus.maps):
            u = corpus.maps[uname]
            for fname in sorted(corpus.families):
                phi = corpus.families[fname]
                if set(phi.index) != set(u.dom):
                    continue
                psi = fallback(u, phi)
                try:
                    r = _decided(in_l(u, phi, psi), in_r(u, phi, psi))
                    if r is None:
                        res.checked += 1
                        res.fail(f"no input realizer for {uname}/{fname}")
                        continue
                    _expect(res, fn(direction, r, u, phi, psi), out_l(u, phi, psi),
                            out_r(u, phi, psi), f"transpose on {uname}/{fname}")
                except BudgetExceeded:
                    res.skipped += 1
        return res

    law.__name__ = "law_" + name.replace(".", "_").replace("-", "_")
    return law


def law_adjunction_iff(rng, sizes, corpus):
    """Some realizer exists on one side iff on the other."""
    res = LawResult("quantifiers.adjunction-iff")
    for _ in range(sizes.n):
        u, phi, psi = draw_quant(rng, sizes)
        pairs = [("forall", (psi, Q.forall_along(u, phi)), (reindex(u, psi), phi)),
                 ("exists", (Q.exists_along(u, phi), psi), (phi, reindex(u, psi)))]
        for which, a, b in pairs:
            res.checked += 1
            try:
                x, y = _decided(*a), _decided(*b)
            except TriposError as exc:
                res.fail(f"{which}: {exc}")
                continue
            if (x is None) != (y is None):
                res.fail(f"{which} adjunction disagrees for u = {u}")
    return res


def law_empty_fibers(rng, sizes, corpus):
    res = LawResult("quantifiers.empty-fibers")
    for _ in range(sizes.n):
        J = random_labels(rng, "j", 1, sizes.index)
        I = random_labels(rng, "i", 0, sizes.index)
        u = random_map(rng, I, J)
        phi = random_family(rng, I, max_plus=sizes.quant_carrier, max_minus=sizes.quant_carrier)
        empty = [j for j in J if not u.preimage(j)]
        fa, ex = Q.forall_along(u, phi), Q.exists_along(u, phi)
        for j in empty:
            target = point(_pred(rng, sizes.carrier))
            res.checked += 1
            if _decided(point(C.TRUTH), point(fa[j])) is None:
                res.fail(f"truth does not entail the universal fiber at empty {j}")
            if _decided(point(ex[j]), target) is None:
                res.fail(f"the existential fiber at empty {j} does not entail everything")
    return res


def draw_square(rng, sizes):
    sq = random_square(rng, sizes.index)
    k = sizes.quant_carrier
    return sq, random_family(rng, sq.u.dom, max_plus=k, max_minus=k)


def law_beck_chevalley(rng, sizes, corpus):
    res = LawResult("quantifiers.beck-chevalley")
    for _ in range(sizes.n):
        sq, phi = draw_square(rng, sizes)
        for which in ("forall", "exists"):
            res.checked += 1
            rep = Q.beck_chevalley(sq, phi, which)
            if not rep.mutual:
                res.fail(f"{rep.describe()} for square {sq}")
    return res


# ---------------------------------------------------------------------------
# proofs


def draw_dist(rng, sizes):
    k = sizes.dist_carrier
    return tuple(point(_pred(rng, k)) for _ in range(3))


def draw_frobenius(rng, sizes):
    I = random_labels(rng, "i", 0, sizes.index)
    J = random_labels(rng, "j", 1, sizes.index)
    u = random_map(rng, I, J)
    k = sizes.frob_carrier
    return u, random_family(rng, I, max_plus=k, max_minus=k), \
        random_family(rng, J, max_plus=k, max_minus=k)


def _compiled(res, term, what):
    res.checked += 1
    try:
        PC.compile_proof(term)
    except TriposError as exc:
        res.fail(f"{what}: {exc}")


def law_distributivity(rng, sizes, corpus):
    res = LawResult("proofs.distributivity")
    for _ in range(sizes.n):
        p, q, r = draw_dist(rng, sizes)
        _compiled(res, PC.distributivity(p, q, r), "p and (q or r) |- (p and q) or (p and r)")
        _compiled(res, PC.distributivity_converse(p, q, r), "converse")
    return res


def law_frobenius(rng, sizes, corpus):
    res = LawResult("proofs.frobenius")
    for _ in range(sizes.n):
        u, phi, psi = draw_frobenius(rng, sizes)
        _compiled(res, PC.frobenius(u, phi, psi), "exists(phi and u*psi) |- exists(phi) and psi")
        _compiled(res, PC.frobenius_converse(u, phi, psi), "converse")
    return res


def law_extraction(rng, sizes, corpus):
    """Small derivations over random predicates compile to checking realizers."""
    res = LawResult("proofs.extraction-sound")
    k = sizes.dist_carrier
    for _ in range(sizes.n):
        p, q = point(_pred(rng, k)), point(_pred(rng, k))
        hp, hpq = PC.Hyp(p), PC.Hyp(C.conj(p, q))
        terms = [
            PC.swap(p, q),
            PC.AndE1(PC.AndI(hp, hp)),
            PC.ImpE(PC.ImpI(PC.AndE2(PC.Hyp(C.conj(C.conj(p, q), p)))), PC.AndE1(hpq)),
            PC.OrE(PC.OrI2(hp, q), PC.OrI1(PC.Hyp(q), p)),
            PC.Cut(hpq, PC.AndE1(hpq)),
            PC.ExFalso(PC.Hyp(C.bottom(p.index)), q),
            PC.TruthI(p),
        ]
        for t in terms:
            _compiled(res, t, t.rule)
    return res


def law_cut_compositional(rng, sizes, corpus):
    res = LawResult("proofs.cut-is-composition")
    k = sizes.dist_carrier
    for _ in range(sizes.n):
        p, q = point(_pred(rng, k)), point(_pred(rng, k))
        s = PC.AndI(PC.AndE2(PC.Hyp(C.conj(p, q))), PC.AndE1(PC.Hyp(C.conj(p, q))))
        t = PC.AndE1(PC.Hyp(C.conj(q, p)))
        res.checked += 1
        direct = PC.compile_proof(PC.Cut(s, t))
        composed = C.compose_realizers(PC.compile_proof(s), PC.compile_proof(t),
                                       C.conj(p, q), C.conj(q, p), q)
        if direct != composed:
            res.fail("compiled cut differs from the composite of the compiled premises")
    return res


# ---------------------------------------------------------------------------
# checker


def check_reversed(r: RealizerPair, phi, psi) -> bool:
    """The realization condition evaluated in reverse enumeration order."""
    phi, psi = as_family(phi), as_family(psi)
    for i in reversed(phi.index):
        p, q = phi[i], psi[i]
        for a in reversed(p.plusplus.elements()):
            for b in reversed(q.minus.elements()):
                if all(p.holds(a, c) for c in r.backward(a, b)) and not q.holds(r.forward(a), b):
                    return False
    return True


def law_order_independent(rng, sizes, corpus):
    res = LawResult("checker.order-independent")
    for _ in range(sizes.n * 2):
        # greatest candidates are well formed and check about half the time
        phi, psi = _pred(rng, sizes.carrier), _pred(rng, sizes.carrier)
        r = greatest_realizer(phi, psi)
        res.checked += 1
        if bool(check_realizes(r, phi, psi)) != check_reversed(r, phi, psi):
            res.fail("forward and reverse enumeration disagree")
    return res


def law_truth_not_falsity(rng, sizes, corpus):
    res = LawResult("checker.truth-does-not-entail-falsity")
    res.checked = 1
    if decide_entails(C.TRUTH, C.FALSITY, strategy="exhaustive") is not None:
        res.fail("a realizer of true |- false was found")
    return res


def law_decide_finds(rng, sizes, corpus):
    """Entailments witnessed by constructors are found by the decision procedure."""
    res = LawResult("checker.decide-finds-constructed")
    pairs = _corpus_pairs(corpus) + [(_pred(rng, sizes.carrier), _pred(rng, sizes.carrier))
                                     for _ in range(sizes.n)]
    for p, q in pairs:
        for phi, psi, what in ((C.conj(p, q), p, "p and q |- p"),
                               (q, C.disj(p, q), "q |- p or q"),
                               (p, p, "p |- p"),
                               (C.FALSITY, p, "false |- p")):
            res.checked += 1
            r = _decided(phi, psi)
            if r is None:
                res.fail(f"{what} not found for p = {_pstr(p)}, q = {_pstr(q)}")
    return res


LAWS = [
    law_value_roundtrip,
    law_exp_iso,
    law_bracket_monotone,
    law_tabulate_apply,
    law_validation,
    law_upward_close,
    law_reindex_functorial,
    law_constructor_closure,
    law_identity,
    law_compose,
    law_compose_units,
    law_projections,
    law_pairing,
    law_injections,
    law_case,
    law_case_literal_rejected,
    law_curry,
    law_uncurry,
    law_curry_adjunction,
    law_truth_falsity,
    transpose_law("forall.transpose-down"),
    transpose_law("forall.transpose-up"),
    transpose_law("exists.transpose-down"),
    transpose_law("exists.transpose-up"),
    law_adjunction_iff,
    law_empty_fibers,
    law_beck_chevalley,
    law_distributivity,
    law_frobenius,
    law_extraction,
    law_cut_compositional,
    law_order_independent,
    law_truth_not_falsity,
    law_decide_finds,
]


def law_rng(seed, name: str) -> random.Random:
    return random.Random(f"{seed}/{name}")


def law_suite(corpus=None, seed=0, sizes: Sizes = Sizes(), laws=None, case=None) -> Report:
    """Run the battery; ``case`` substitutes the case constructor under test."""
    corpus = corpus if corpus is not None else Corpus()
    report = Report(seed, len(corpus))
    for law in laws or LAWS:
        name = law.__name__
        rng = law_rng(seed, name)
        try:
            if law is law_case and case is not None:
                res = law(rng, sizes, corpus, case=case)
            else:
                res = law(rng, sizes, corpus)
        except TriposError as exc:
            res = LawResult(name.removeprefix("law_"), passed=False, detail=f"error: {exc}")
        report.results.append(res)
    return report
