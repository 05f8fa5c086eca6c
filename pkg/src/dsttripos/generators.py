"""Seeded random instances: predicates, families, maps, pullback squares."""
from __future__ import annotations

import random
from typing import Optional

from .checker import decide_entails
from .errors import BudgetExceeded
from .predicates import FiniteMap, IndexedPred, TablePred, upward_close
from .quantifiers import Square, pullback
from .values import Star, as_carrier

PLUS_POOL = (1, 2, 3)
MINUS_POOL = (7, 8, 9)


def random_pred(rng: random.Random, max_plus: int = 3, max_minus: int = 3,
                plus_pool=PLUS_POOL, minus_pool=MINUS_POOL) -> TablePred:
    plus = rng.sample(plus_pool[:max(max_plus, 0)], rng.randint(0, min(max_plus, len(plus_pool))))
    minus = rng.sample(minus_pool[:max(max_minus, 0)],
                       rng.randint(0, min(max_minus, len(minus_pool))))
    stars = Star(as_carrier(frozenset(plus))).elements()
    seed = set()
    for b in minus:
        # biased towards relating large witness sets, so entailments are common
        for a in stars:
            if rng.random() < 0.15 + 0.2 * len(a):
                seed.add((a, b))
    return upward_close(frozenset(plus), frozenset(minus), seed)


def random_labels(rng: random.Random, prefix: str, lo: int = 0, hi: int = 3) -> tuple:
    return tuple(f"{prefix}{k}" for k in range(rng.randint(lo, hi)))


def random_family(rng: random.Random, index, **kw) -> IndexedPred:
    return IndexedPred.from_dict({i: random_pred(rng, **kw) for i in index})


def random_map(rng: random.Random, dom, cod) -> FiniteMap:
    if dom and not cod:
        raise ValueError("no map from a nonempty set into the empty set")
    return FiniteMap.make(dom, cod, {i: rng.choice(cod) for i in dom})


def random_square(rng: random.Random, max_size: int = 3, shuffle_apex: bool = True):
    """A random pullback square of sets with at most ``max_size`` elements."""
    while True:
        J = random_labels(rng, "j", 1, max_size)
        I = random_labels(rng, "i", 0, max_size)
        K = random_labels(rng, "k", 0, max_size)
        sq = pullback(random_map(rng, I, J), random_map(rng, K, J))
        if len(sq.top.dom) <= max_size:
            break
    if not shuffle_apex:
        return sq
    apex = list(sq.top.dom)
    names = [f"p{n}" for n in range(len(apex))]
    rng.shuffle(names)
    rename = dict(zip(apex, names))
    top = FiniteMap.make(names, sq.top.cod, {rename[p]: sq.top(p) for p in apex})
    left = FiniteMap.make(names, sq.left.cod, {rename[p]: sq.left(p) for p in apex})
    return Square(top, left, sq.u, sq.v)


def find_realizer(phi, psi, budget: int = 50_000) -> Optional[object]:
    try:
        return decide_entails(phi, psi, budget)
    except BudgetExceeded:
        return None
