"""Realizer pairs and the canonical domains they are tabulated on."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable

from .errors import IndexMismatch
from .predicates import IndexedPred
from .values import apply_value, canonical, graph_dict, show, tabulate


@dataclass(frozen=True)
class RealizerPair:
    """Forward graph on positive data and backward graph on challenges.

    ``plus_part`` maps ``a`` to an element of the consequent's ``plus*``;
    ``minus_part`` maps the pair ``(a, b)`` to an element of the
    antecedent's ``minus*``.
    """
    plus_part: frozenset
    minus_part: frozenset

    @cached_property
    def _tables(self):
        return graph_dict(self.plus_part), graph_dict(self.minus_part)

    def forward(self, a):
        try:
            return self._tables[0][a]
        except KeyError:
            return apply_value(self.plus_part, a)  # raises Undefined

    def backward(self, a, b):
        try:
            return self._tables[1][(a, b)]
        except KeyError:
            return apply_value(self.minus_part, (a, b))

    def __str__(self):
        return f"(realizer :plus {show(self.plus_part)} :minus {show(self.minus_part)})"


def same_index(phi: IndexedPred, psi: IndexedPred):
    if set(phi.index) != set(psi.index):
        raise IndexMismatch(f"families live over different indices: {phi.index} vs {psi.index}")


def applicable(phi: IndexedPred, a) -> list:
    """Labels ``i`` with ``a`` listed in ``phi_i.plus*``."""
    return [i for i, p in phi.items() if p.plusplus.listed(a)]


@lru_cache(maxsize=1024)
def plus_domain(phi: IndexedPred) -> tuple:
    out = set()
    for p in phi.fibers:
        out.update(p.plusplus.elements())
    return canonical(out)


@lru_cache(maxsize=1024)
def minus_domain(phi: IndexedPred, psi: IndexedPred) -> tuple:
    same_index(phi, psi)
    out = set()
    for i, p in phi.items():
        bs = psi[i].minus.elements()
        for a in p.plusplus.elements():
            out.update((a, b) for b in bs)
    return canonical(out)


def build(phi: IndexedPred, psi: IndexedPred, fwd: Callable, bwd: Callable) -> RealizerPair:
    """Tabulate ``fwd(a)`` and ``bwd(a, b)`` on the domains fixed by ``phi |- psi``."""
    return RealizerPair(
        tabulate(fwd, plus_domain(phi)),
        tabulate(lambda ab: bwd(*ab), minus_domain(phi, psi)),
    )


def restrict(r: RealizerPair, phi: IndexedPred, psi: IndexedPred) -> RealizerPair:
    return build(phi, psi, r.forward, r.backward)
