"""Deciding realization, and searching for realizers.

Everything here is a finite enumeration.  ``check_realizes`` walks
``(i, a, b)`` in canonical order.  ``decide_entails`` has two strategies:

``exhaustive``
    literal brute force over the product of all canonical candidate graphs;
    only feasible for tiny instances.
``monotone`` (default)
    builds the greatest candidate, i.e. ``e+(a)`` the whole common positive
    carrier and ``e-(a, b)`` the whole common negative carrier.  Upward
    closure of the consequent makes larger forward values better, and
    enlarging the challenge set only strengthens the hypothesis, so an
    entailment has a canonical realizer iff the greatest one checks.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import BudgetExceeded, CheckFailed, DomainMismatch, TriposError
from .predicates import IndexedPred, as_family
from .realizers import RealizerPair, applicable, minus_domain, plus_domain, same_index
from .values import Star, canonical, show_safe, tabulate

DEFAULT_BUDGET = 200_000


@dataclass(frozen=True)
class Verdict:
    holds: bool
    counterexample: Optional[tuple] = None  # (i, a, b)

    def __bool__(self):
        return self.holds

    def describe(self) -> str:
        if self.holds:
            return "holds"
        i, a, b = self.counterexample
        return f"fails at index {i}, a = {show_safe(a)}, b = {show_safe(b)}"


def check_realizes(r: RealizerPair, phi, psi) -> Verdict:
    """Does ``r`` witness ``phi |- psi``?  Raises DomainMismatch on ill-formed ``r``."""
    phi, psi = as_family(phi), as_family(psi)
    same_index(phi, psi)
    for i in phi.index:
        p, q = phi[i], psi[i]
        pstar, qstar, cstar = p.plusplus, Star(q.plus), Star(p.minus)
        bs = q.minus.elements()
        for a in pstar.elements():
            # challenge sets repeat across b; remember their verdicts
            seen_cs = {}
            try:
                ea = r.forward(a)
            except TriposError as exc:
                raise DomainMismatch(f"forward graph undefined at {show_safe(a)}: {exc}") from exc
            if ea not in qstar:
                raise DomainMismatch(f"forward value {show_safe(ea)} at {show_safe(a)} "
                                     f"leaves the consequent carrier at index {i}")
            for b in bs:
                try:
                    cs = r.backward(a, b)
                except TriposError as exc:
                    raise DomainMismatch(f"backward graph undefined at "
                                         f"({show_safe(a)}, {show_safe(b)})") from exc
                hyp = seen_cs.get(cs)
                if hyp is None:
                    if cs not in cstar:
                        raise DomainMismatch(f"backward value {show_safe(cs)} leaves the "
                                             f"antecedent challenges at index {i}")
                    hyp = seen_cs[cs] = all(p.holds(a, c) for c in cs)
                if hyp and not q.holds(ea, b):
                    return Verdict(False, (i, a, b))
    return Verdict(True)


def require(r: RealizerPair, phi, psi, what: str = "realizer") -> RealizerPair:
    v = check_realizes(r, phi, psi)
    if not v:
        raise CheckFailed(f"{what} does not realize the entailment: {v.describe()}",
                          v.counterexample)
    return r


def _common(carriers) -> frozenset:
    """Canonical elements of any carrier that belong to all of them.

    Membership is liberal while enumeration is exact, so drawing candidates
    from one carrier only would make the result depend on the order.
    """
    return _common_set(frozenset(carriers))


@lru_cache(maxsize=4096)
def _common_set(carriers: frozenset) -> frozenset:
    if len(carriers) == 1:
        (c,) = carriers
        return frozenset(c.elements())
    pool = set()
    for c in carriers:
        pool.update(c.elements())
    return frozenset(x for x in pool if all(x in c for c in carriers))


def check_cost(phi: IndexedPred, psi: IndexedPred) -> int:
    return sum(phi[i].plusplus.size * max(1, psi[i].minus.size) for i in phi.index)


def greatest_realizer(phi, psi) -> RealizerPair:
    """The largest canonical candidate for ``phi |- psi``."""
    phi, psi = as_family(phi), as_family(psi)

    def fwd(a):
        return _common([psi[i].plus for i in applicable(phi, a)])

    def bwd(a, b):
        return _common([phi[i].minus for i in applicable(phi, a) if psi[i].minus.listed(b)])

    return RealizerPair(tabulate(fwd, plus_domain(phi)),
                        tabulate(lambda ab: bwd(*ab), minus_domain(phi, psi)))


def space_size(phi, psi) -> int:
    """Number of canonical candidate realizer pairs."""
    phi, psi = as_family(phi), as_family(psi)
    n = 1
    for a in plus_domain(phi):
        n *= 2 ** len(_common([psi[i].plus for i in applicable(phi, a)]))
    for a, b in minus_domain(phi, psi):
        n *= 2 ** len(_common([phi[i].minus for i in applicable(phi, a) if psi[i].minus.listed(b)]))
    return n


def _subsets(s: frozenset):
    xs = canonical(s)
    return [frozenset(c) for r in range(len(xs) + 1) for c in itertools.combinations(xs, r)]


def decide_entails(phi, psi, budget: int = DEFAULT_BUDGET,
                   strategy: str = "monotone") -> Optional[RealizerPair]:
    """Some canonical realizer of ``phi |- psi``, or ``None`` if there is none."""
    phi, psi = as_family(phi), as_family(psi)
    same_index(phi, psi)
    if strategy == "monotone":
        cost = check_cost(phi, psi)
        if cost > budget:
            raise BudgetExceeded(cost, budget, what="entailment check")
        r = greatest_realizer(phi, psi)
        return r if check_realizes(r, phi, psi) else None
    if strategy != "exhaustive":
        raise ValueError(f"unknown strategy {strategy!r}")
    size = space_size(phi, psi)
    if size > budget:
        raise BudgetExceeded(size, budget)
    pdom, mdom = plus_domain(phi), minus_domain(phi, psi)
    pchoices = [_subsets(_common([psi[i].plus for i in applicable(phi, a)])) for a in pdom]
    mchoices = [_subsets(_common([phi[i].minus for i in applicable(phi, a) if psi[i].minus.listed(b)]))
                for a, b in mdom]
    for pvals in itertools.product(*pchoices):
        plus_part = frozenset(zip(pdom, pvals))
        for mvals in itertools.product(*mchoices):
            r = RealizerPair(plus_part, frozenset(zip(mdom, mvals)))
            if check_realizes(r, phi, psi):
                return r
    return None

