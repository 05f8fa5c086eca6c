"""Quantification along finite maps, the adjunction transposes, Beck-Chevalley.

The fibers of ``forall_along(u, phi)`` and ``exists_along(u, phi)`` at ``j``
depend only on the *set* of predicates ``phi_i`` with ``u(i) = j``; they are
stored that way, which makes quantification commute with reindexing along a
pullback on the nose.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .checker import DEFAULT_BUDGET, decide_entails, require
from .errors import IndexMismatch, NotAPullback
from .predicates import FiniteMap, IndexedPred, Pred, reindex, sort_labels
from .realizers import RealizerPair, applicable, build, plus_domain, restrict
from .values import (
    EMPTY,
    Carrier,
    Finite,
    Star,
    Union,
    apply_value,
    bracket,
    canonical,
    graph_dict,
    is_graph,
    tabulate,
)

#: the single argument of the guarded function space ``[u(i) = j] -> ...``
GUARD = 0


def _common_star(preds, attr) -> frozenset:
    """Elements common to the ``attr`` carriers of ``preds``."""
    carriers = [getattr(p, attr) for p in preds]
    pool = set()
    for c in carriers:
        pool.update(c.elements())
    return frozenset(x for x in pool if all(x in c for c in carriers))


@dataclass(frozen=True)
class GuardedSpace(Carrier):
    """Positive carrier of a universal fiber: graphs ``{(0, s)}``."""
    preds: frozenset

    def __contains__(self, g):
        if not is_graph(g):
            return False
        if not self.preds:
            return True
        table = graph_dict(g)
        return GUARD in table and all(table[GUARD] in p.plusplus for p in self.preds)

    @cached_property
    def _values(self):
        if not self.preds:
            return None
        return Star(Finite(_common_star(self.preds, "plus"))).elements()

    @property
    def size(self):
        return 1 if not self.preds else len(self._values)

    def _generate(self):
        if not self.preds:
            return iter([EMPTY])
        return (frozenset({(GUARD, s)}) for s in self._values)


@dataclass(frozen=True)
class SectionSpace(Carrier):
    """Negative carrier of an existential fiber.

    Graphs ``g`` defined on every ``s`` in some ``phi_i++`` with ``g(s)`` in
    ``phi_i.minus*`` for each such ``i``.
    """
    preds: frozenset

    @cached_property
    def _points(self):
        pts = canonical(s for p in self.preds for s in p.plusplus.elements())
        return tuple((s, _common_star([p for p in self.preds if s in p.plusplus], "minus"))
                     for s in pts)

    def __contains__(self, g):
        if not is_graph(g):
            return False
        table = graph_dict(g)
        for s, allowed in self._points:
            if s not in table:
                return False
            v = table[s]
            if not (isinstance(v, frozenset) and v <= allowed):
                return False
        return True

    @property
    def size(self):
        n = 1
        for _, allowed in self._points:
            n *= 2 ** len(allowed)
        return n

    def _generate(self):
        pts = [s for s, _ in self._points]
        choices = [Star(Finite(allowed)).elements() for _, allowed in self._points]
        for vals in itertools.product(*choices):
            yield frozenset(zip(pts, vals))


@dataclass(frozen=True)
class ForallPred(Pred):
    preds: frozenset

    @cached_property
    def plus(self):
        return GuardedSpace(self.preds)

    @cached_property
    def minus(self):
        return Union(frozenset(p.minus for p in self.preds))

    def holds(self, a, b):
        arg = None
        for p in self.preds:
            if b in p.minus:
                if arg is None:
                    arg = bracket(a, GUARD)
                if not p.holds(arg, b):
                    return False
        return True


@dataclass(frozen=True)
class ExistsPred(Pred):
    preds: frozenset

    @cached_property
    def plus(self):
        return Union(frozenset(p.plusplus for p in self.preds))

    @cached_property
    def minus(self):
        return SectionSpace(self.preds)

    def holds(self, a, b):
        for s in a:
            for p in self.preds:
                if s in p.plusplus and all(p.holds(s, c) for c in apply_value(b, s)):
                    return True
        return False


def _along(cls, u: FiniteMap, phi: IndexedPred) -> IndexedPred:
    if set(u.dom) != set(phi.index):
        raise IndexMismatch(f"map domain {u.dom} differs from family index {phi.index}")
    return IndexedPred(u.cod, tuple(cls(frozenset(phi[i] for i in u.preimage(j)))
                                    for j in u.cod))


def forall_along(u: FiniteMap, phi: IndexedPred) -> IndexedPred:
    return _along(ForallPred, u, phi)


def exists_along(u: FiniteMap, phi: IndexedPred) -> IndexedPred:
    return _along(ExistsPred, u, phi)


def reindex_realizer(r: RealizerPair, u: FiniteMap, phi: IndexedPred,
                     psi: IndexedPred) -> RealizerPair:
    """A realizer of ``phi |- psi`` restricted to one of ``u*phi |- u*psi``."""
    return restrict(r, reindex(u, phi), reindex(u, psi))


# ---------------------------------------------------------------------------
# adjunction transposes


def forall_transpose(direction: str, r: RealizerPair, u: FiniteMap, phi: IndexedPred,
                     psi: IndexedPred, check: bool = True) -> RealizerPair:
    """``down``: ``psi |- forall_u phi`` to ``u*psi |- phi``; ``up``: the converse."""
    upsi, fa = reindex(u, psi), forall_along(u, phi)
    if direction == "down":
        if check:
            require(r, psi, fa, "forall transpose input")
        return build(upsi, phi, lambda x: bracket(r.forward(x), GUARD), r.backward)
    if direction == "up":
        if check:
            require(r, upsi, phi, "forall transpose input")
        defined = set(plus_domain(upsi))

        def fwd(x):
            if x not in defined:
                # only empty fibers apply, where every code qualifies
                return EMPTY
            return frozenset({frozenset({(GUARD, r.forward(x))})})

        return build(psi, fa, fwd, r.backward)
    raise ValueError(f"direction must be 'down' or 'up', not {direction!r}")


def exists_transpose(direction: str, r: RealizerPair, u: FiniteMap, phi: IndexedPred,
                     psi: IndexedPred, check: bool = True) -> RealizerPair:
    """``down``: ``exists_u phi |- psi`` to ``phi |- u*psi``; ``up``: the converse."""
    upsi, ex = reindex(u, psi), exists_along(u, phi)
    if direction == "down":
        if check:
            require(r, ex, psi, "exists transpose input")
        return build(phi, upsi,
                     lambda x: r.forward(frozenset({x})),
                     lambda x, y: bracket(r.backward(frozenset({x}), y), x))
    if direction == "up":
        if check:
            require(r, phi, upsi, "exists transpose input")

        def fwd(x):
            out = set()
            for z in x:
                out.update(r.forward(z))
            return frozenset(out)

        def bwd(x, y):
            js = [j for j in applicable(ex, x) if psi[j].minus.listed(y)]
            zs = canonical(z for j in js for i in u.preimage(j)
                           for z in phi[i].plusplus.elements())
            return frozenset({tabulate(lambda z: r.backward(z, y), zs)})

        return build(ex, psi, fwd, bwd)
    raise ValueError(f"direction must be 'down' or 'up', not {direction!r}")


# ---------------------------------------------------------------------------
# Beck-Chevalley


@dataclass(frozen=True)
class Square:
    """A commuting square ``u . top = v . left`` with apex ``P``.

    ::

        P --top--> I
        |          |
       left        u
        v          v
        K ---v---> J
    """
    top: FiniteMap
    left: FiniteMap
    u: FiniteMap
    v: FiniteMap

    def validate(self) -> "Square":
        top, left, u, v = self.top, self.left, self.u, self.v
        if set(top.dom) != set(left.dom):
            raise NotAPullback("top and left maps have different domains")
        if set(top.cod) != set(u.dom) or set(left.cod) != set(v.dom) \
                or set(u.cod) != set(v.cod):
            raise NotAPullback("maps do not form a square")
        seen = {}
        for p in top.dom:
            i, k = top(p), left(p)
            if u(i) != v(k):
                raise NotAPullback(f"square does not commute at {p!r}", witness=p)
            if (i, k) in seen:
                raise NotAPullback(f"{seen[(i, k)]!r} and {p!r} have the same image",
                                   witness=(seen[(i, k)], p))
            seen[(i, k)] = p
        for i in u.dom:
            for k in v.dom:
                if u(i) == v(k) and (i, k) not in seen:
                    raise NotAPullback(f"no apex element over ({i!r}, {k!r})",
                                       witness=(i, k))
        return self


def pullback(u: FiniteMap, v: FiniteMap) -> Square:
    """The canonical pullback of ``u: I -> J`` and ``v: K -> J``; apex labels are pairs."""
    apex = sort_labels((i, k) for i in u.dom for k in v.dom if u(i) == v(k))
    top = FiniteMap(apex, u.dom, tuple((p, p[0]) for p in apex))
    left = FiniteMap(apex, v.dom, tuple((p, p[1]) for p in apex))
    return Square(top, left, u, v)


@dataclass(frozen=True)
class BCReport:
    which: str
    literal_equal: bool
    forward: Optional[RealizerPair]
    backward: Optional[RealizerPair]

    @property
    def mutual(self) -> bool:
        return self.forward is not None and self.backward is not None

    def describe(self) -> str:
        return (f"{self.which}: literal={'yes' if self.literal_equal else 'no'} "
                f"quantify-then-reindex |- reindex-then-quantify: "
                f"{'yes' if self.forward is not None else 'no'}, "
                f"converse: {'yes' if self.backward is not None else 'no'}")


def beck_chevalley(square: Square, phi: IndexedPred, which: str,
                   budget: int = DEFAULT_BUDGET) -> BCReport:
    """Compare ``v* Q_u phi`` with ``Q_left top* phi`` for ``Q`` in {forall, exists}."""
    square.validate()
    along = {"forall": forall_along, "exists": exists_along}[which]
    lhs = reindex(square.v, along(square.u, phi))
    rhs = along(square.left, reindex(square.top, phi))
    return BCReport(which, lhs == rhs,
                    decide_entails(lhs, rhs, budget), decide_entails(rhs, lhs, budget))
