"""Predicates, finite indexed families of them, and reindexing.

A predicate is a triple ``(plus, minus, rel)``: a positive carrier, a
negative carrier and a relation between finite subsets of ``plus`` and
elements of ``minus`` that is upward closed in its first argument.
:class:`TablePred` stores the relation as an explicit table; the connectives
and quantifiers define subclasses whose relation is computed from their
components.  Every predicate is a frozen dataclass, so equality is structural.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable

from .errors import BudgetExceeded, IndexMismatch, NotUpwardClosed, OutOfCarrier
from .values import ENUM_LIMIT, Carrier, Finite, Star, as_carrier, canonical, show_safe


class Pred:
    """Base class.  Subclasses provide ``plus``, ``minus`` and ``holds``."""

    plus: Carrier
    minus: Carrier

    def holds(self, a, b) -> bool:
        raise NotImplementedError

    @property
    def plusplus(self) -> Star:
        return Star(self.plus)

    def table(self, limit: int = ENUM_LIMIT) -> frozenset:
        """The relation as an explicit set of pairs."""
        n = self.plusplus.size * self.minus.size
        if n > limit:
            raise BudgetExceeded(n, limit, what="relation table")
        return frozenset((a, b) for a in self.plusplus for b in self.minus if self.holds(a, b))

    def row(self, a) -> frozenset:
        """The negative values related to ``a``."""
        return frozenset(b for b in self.minus.elements() if self.holds(a, b))

    def row_bits(self, xs: tuple) -> list:
        """Rows of every subset of ``xs`` as bit sets over ``minus.elements()``.

        Entry ``mask`` is the row of the subset whose members are the
        ``xs[i]`` with bit ``i`` set.
        """
        pos = {b: 1 << k for k, b in enumerate(self.minus.elements())}
        return [sum(pos[b] for b in self.row(a)) for a in subsets_by_mask(xs)]

    def closure_violation(self, limit: int = ENUM_LIMIT):
        """A witness ``(a, a2, b)`` against upward closure, or ``None``.

        Checking one-element extensions suffices: every inclusion in a
        finite powerset is a chain of them.
        """
        n = self.plus.size
        if 2 ** n > limit:
            raise BudgetExceeded(2 ** n, limit, what="closure check")
        xs = self.plus.elements()
        rows = self.row_bits(xs)
        step = next(((m, m2) for m, m2 in _extensions(n) if rows[m] & ~rows[m2]), None)
        if step is None:
            return None
        m, m2 = step
        lost = rows[m] & ~rows[m2]
        b = self.minus.elements()[(lost & -lost).bit_length() - 1]
        return (_subset(xs, m), _subset(xs, m2), b)


@lru_cache(maxsize=None)
def _extensions(n: int) -> tuple:
    """Pairs ``(mask, mask | bit)`` over ``n`` bits, in order of mask then bit."""
    return tuple((m, m | 1 << i) for m in range(1 << n) for i in range(n) if not m >> i & 1)


def subsets_by_mask(xs) -> list:
    out = [frozenset()]
    for x in xs:
        out += [s | {x} for s in out]
    return out


def _subset(xs, mask) -> frozenset:
    return frozenset(x for i, x in enumerate(xs) if mask >> i & 1)


@dataclass(frozen=True)
class TablePred(Pred):
    plus: Carrier
    minus: Carrier
    rel: frozenset = field(default=frozenset())

    def holds(self, a, b):
        return (a, b) in self.rel

    @cached_property
    def _rows(self):
        rows = {}
        for a, b in self.rel:
            rows.setdefault(a, set()).add(b)
        return {a: frozenset(bs) for a, bs in rows.items()}

    def row(self, a):
        return self._rows.get(a, frozenset())

    def row_bits(self, xs):
        memo = self.__dict__.setdefault("_row_bits", {})
        if xs not in memo:
            memo[xs] = Pred.row_bits(self, xs)
        return memo[xs]

    def table(self, limit=ENUM_LIMIT):
        return self.rel


def mk_pred(plus, minus, rel) -> TablePred:
    """Validated constructor for an explicit predicate."""
    plus, minus = as_carrier(plus), as_carrier(minus)
    rel = frozenset(rel)
    stars = Star(plus)
    for entry in canonical(rel):
        if not (isinstance(entry, tuple) and len(entry) == 2):
            raise OutOfCarrier(entry)
        a, b = entry
        if a not in stars or b not in minus:
            raise OutOfCarrier(entry, f"relation entry ({show_safe(a)}, {show_safe(b)}) "
                                      f"is outside plus* x minus")
    p = TablePred(plus, minus, rel)
    validate(p)
    return p


def upward_close(plus, minus, seed) -> TablePred:
    """The least upward-closed predicate whose relation contains ``seed``."""
    plus, minus = as_carrier(plus), as_carrier(minus)
    seed = frozenset(seed)
    stars = Star(plus)
    for entry in seed:
        if entry[0] not in stars or entry[1] not in minus:
            raise OutOfCarrier(entry)
    rel = {(a2, b) for (a, b) in seed for a2 in stars if a <= a2}
    return TablePred(plus, minus, frozenset(rel))


def validate(p: Pred, limit: int = ENUM_LIMIT) -> Pred:
    """Re-check upward closure of ``p``; raises :class:`NotUpwardClosed`."""
    w = p.closure_violation(limit)
    if w is not None:
        a, a2, b = w
        raise NotUpwardClosed(w, f"({show_safe(a)}, {show_safe(b)}) is related but "
                                 f"({show_safe(a2)}, {show_safe(b)}) is not")
    return p


# ---------------------------------------------------------------------------
# indexed families


def label_key(label):
    if isinstance(label, int) and not isinstance(label, bool):
        return (0, label, "")
    if isinstance(label, tuple):
        return (2, 0, tuple(label_key(x) for x in label))
    return (1, 0, str(label))


def sort_labels(labels: Iterable) -> tuple:
    return tuple(sorted(set(labels), key=label_key))


@dataclass(frozen=True)
class IndexedPred:
    """A map from a finite label set to predicates."""
    index: tuple
    fibers: tuple

    def __post_init__(self):
        if len(self.index) != len(self.fibers):
            raise IndexMismatch("index and fibers differ in length")
        if len(set(self.index)) != len(self.index):
            raise IndexMismatch("duplicate index labels")

    @classmethod
    def from_dict(cls, mapping: dict) -> "IndexedPred":
        labels = sort_labels(mapping)
        return cls(labels, tuple(mapping[i] for i in labels))

    @cached_property
    def _by_label(self):
        return dict(zip(self.index, self.fibers))

    def __getitem__(self, i) -> Pred:
        try:
            return self._by_label[i]
        except KeyError:
            raise IndexMismatch(f"label {i!r} not in index") from None

    def items(self):
        return zip(self.index, self.fibers)

    def map(self, fn) -> "IndexedPred":
        return IndexedPred(self.index, tuple(fn(p) for p in self.fibers))


POINT = "*"


def point(p: Pred) -> IndexedPred:
    """``p`` as a family over a one-element index."""
    return IndexedPred((POINT,), (p,))


def constant(p: Pred, index) -> IndexedPred:
    index = sort_labels(index)
    return IndexedPred(index, (p,) * len(index))


def as_family(p) -> IndexedPred:
    return p if isinstance(p, IndexedPred) else point(p)


@dataclass(frozen=True)
class FiniteMap:
    """A total map ``u: dom -> cod`` between finite label sets."""
    dom: tuple
    cod: tuple
    graph: tuple  # ((i, j), ...) in dom order

    def __post_init__(self):
        keys = [i for i, _ in self.graph]
        if sorted(keys, key=label_key) != sorted(self.dom, key=label_key):
            raise IndexMismatch("map graph must be defined exactly on its domain")
        cod = set(self.cod)
        for i, j in self.graph:
            if j not in cod:
                raise IndexMismatch(f"image {j!r} of {i!r} is not in the codomain")

    @classmethod
    def make(cls, dom, cod, mapping) -> "FiniteMap":
        dom, cod = sort_labels(dom), sort_labels(cod)
        mapping = dict(mapping)
        if set(mapping) != set(dom):
            raise IndexMismatch("map graph must be defined exactly on its domain")
        return cls(dom, cod, tuple((i, mapping[i]) for i in dom))

    @classmethod
    def identity(cls, labels) -> "FiniteMap":
        labels = sort_labels(labels)
        return cls(labels, labels, tuple((i, i) for i in labels))

    @cached_property
    def _table(self):
        return dict(self.graph)

    def __call__(self, i):
        return self._table[i]

    def preimage(self, j) -> tuple:
        return tuple(i for i in self.dom if self._table[i] == j)

    def then(self, other: "FiniteMap") -> "FiniteMap":
        """``other . self``."""
        if set(self.cod) != set(other.dom):
            raise IndexMismatch("maps do not compose")
        return FiniteMap(self.dom, other.cod, tuple((i, other(self(i))) for i in self.dom))


def reindex(u: FiniteMap, psi: IndexedPred) -> IndexedPred:
    """Precomposition: the fiber at ``i`` is ``psi`` at ``u(i)``."""
    if set(u.cod) != set(psi.index):
        raise IndexMismatch(f"map codomain {u.cod} differs from family index {psi.index}")
    return IndexedPred(u.dom, tuple(psi[u(i)] for i in u.dom))

