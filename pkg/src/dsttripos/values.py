"""The carrier universe and its applicative structure.

Values are plain immutable Python objects:

* naturals are ``int`` (``bool`` is rejected),
* pairs are 2-tuples ``(a, b)``,
* finite sets are ``frozenset`` of values.

A finite set of pairs with pairwise distinct first components is a *graph*
and acts as a finite partial function; application is graph lookup.  Sets are
unordered in memory; :func:`sort_key` fixes the canonical order
(naturals < pairs < sets, recursively lexicographic) used for printing and
for every enumeration in the package.

Carriers (the sets X, Y of positive and negative data) are :class:`Carrier`
objects.  They answer membership without enumerating, know their size
arithmetically, and enumerate in canonical order on demand.  Membership in a
function space follows the usual convention for codes: a graph belongs to
``X -> Y`` when it is defined on every element of ``X`` with a value in
``Y``; enumeration yields only the canonical graphs whose domain is exactly
``X``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .errors import BudgetExceeded, Malformed, NotAGraph, NotASet, Undefined

EMPTY = frozenset()

#: default ceiling on the number of elements a carrier may enumerate
ENUM_LIMIT = 1 << 18


def is_value(v) -> bool:
    if isinstance(v, bool):
        return False
    if isinstance(v, int):
        return v >= 0
    if isinstance(v, tuple):
        return len(v) == 2 and is_value(v[0]) and is_value(v[1])
    if isinstance(v, frozenset):
        return all(is_value(e) for e in v)
    return False


@lru_cache(maxsize=1 << 16)
def sort_key(v):
    """Key realising the canonical total order on values."""
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, tuple):
        return (1, sort_key(v[0]), sort_key(v[1]))
    if isinstance(v, frozenset):
        return (2, tuple(sorted(sort_key(e) for e in v)))
    raise Malformed(f"not a value: {v!r}")


def canonical(items: Iterable) -> tuple:
    """The elements of ``items`` without duplicates, in canonical order."""
    return tuple(sorted(set(items), key=sort_key))


def finset(*items) -> frozenset:
    return frozenset(items)


def show(v) -> str:
    """Canonical literal syntax: ``3``, ``(a . b)``, ``{v1 v2 ...}``."""
    if isinstance(v, int):
        return str(v)
    if isinstance(v, tuple):
        return f"({show(v[0])} . {show(v[1])})"
    if isinstance(v, frozenset):
        return "{" + " ".join(show(e) for e in canonical(v)) + "}"
    raise Malformed(f"not a value: {v!r}")


# ---------------------------------------------------------------------------
# graphs and application


@lru_cache(maxsize=1 << 16)
def graph_dict(f) -> dict:
    if not isinstance(f, frozenset):
        raise NotAGraph(f"not a finite set: {show_safe(f)}")
    table = {}
    for entry in f:
        if not isinstance(entry, tuple):
            raise NotAGraph(f"graph entry is not a pair: {show_safe(entry)}")
        key, val = entry
        if key in table:
            raise NotAGraph(f"duplicate key {show_safe(key)} in graph")
        table[key] = val
    return table


def is_graph(f) -> bool:
    try:
        graph_dict(f)
    except NotAGraph:
        return False
    return True


def show_safe(v) -> str:
    try:
        return show(v)
    except Malformed:
        return repr(v)


def apply_value(f, x):
    """Graph application ``f(x)``."""
    table = graph_dict(f)
    try:
        return table[x]
    except KeyError:
        raise Undefined(f"graph has no entry at {show_safe(x)}") from None


def domain(f) -> frozenset:
    return frozenset(graph_dict(f))


def bracket(x, y) -> frozenset:
    """``x[y]``: the union of ``z(y)`` over the graphs ``z`` in ``x``."""
    if not isinstance(x, frozenset):
        raise NotASet(f"bracket expects a set of graphs, got {show_safe(x)}")
    out = set()
    for z in x:
        v = apply_value(z, y)
        if not isinstance(v, frozenset):
            raise NotASet(f"graph value {show_safe(v)} at {show_safe(y)} is not a set")
        out.update(v)
    return frozenset(out)


def tabulate(h: Callable, xs: Iterable) -> frozenset:
    """The graph ``{(x, h(x)) : x in xs}``."""
    entries = []
    for x in xs:
        try:
            entries.append((x, h(x)))
        except (Undefined, NotAGraph, NotASet, Malformed) as exc:
            raise type(exc)(f"{exc} (while tabulating at {show_safe(x)})") from exc
    return frozenset(entries)


# ---------------------------------------------------------------------------
# the exponential isomorphism (X+Y)* ~ X* x Y*


@lru_cache(maxsize=1 << 16)
def to_pair(w) -> tuple:
    if not isinstance(w, frozenset):
        raise Malformed(f"expected a finite set of tagged values, got {show_safe(w)}")
    left, right = [], []
    for e in w:
        if not (isinstance(e, tuple) and isinstance(e[0], int) and not isinstance(e[0], bool)
                and e[0] in (0, 1)):
            raise Malformed(f"untagged element {show_safe(e)}")
        (left if e[0] == 0 else right).append(e[1])
    return frozenset(left), frozenset(right)


def from_pair(a, b) -> frozenset:
    if not (isinstance(a, frozenset) and isinstance(b, frozenset)):
        raise Malformed("from-pair expects two finite sets")
    return frozenset([(0, x) for x in a] + [(1, y) for y in b])


def exp_iso(direction: str, v, X=None, Y=None):
    """Checked form of the isomorphism; ``direction`` is ``to-pair`` or ``from-pair``."""
    if direction == "to-pair":
        a, b = to_pair(v)
        if X is not None and not all(x in as_carrier(X) for x in a):
            raise Malformed("left component leaves X")
        if Y is not None and not all(y in as_carrier(Y) for y in b):
            raise Malformed("right component leaves Y")
        return (a, b)
    if direction == "from-pair":
        if not (isinstance(v, tuple) and len(v) == 2):
            raise Malformed(f"expected a pair, got {show_safe(v)}")
        a, b = v
        if X is not None and a not in Star(as_carrier(X)):
            raise Malformed("left component is not in X*")
        if Y is not None and b not in Star(as_carrier(Y)):
            raise Malformed("right component is not in Y*")
        return from_pair(a, b)
    raise ValueError(f"unknown direction {direction!r}")


# ---------------------------------------------------------------------------
# carriers


class Carrier:
    """A finite set of values that may be too large to list."""

    def __contains__(self, v) -> bool:
        raise NotImplementedError

    @property
    def size(self) -> int:
        raise NotImplementedError

    def _generate(self) -> Iterator:
        raise NotImplementedError

    def elements(self, limit: int = ENUM_LIMIT) -> tuple:
        listing = self.__dict__.get("_listing")
        if listing is None:
            n = self.size
            if n > limit:
                raise BudgetExceeded(n, limit, what=f"carrier {type(self).__name__}")
            # carriers are immutable, so the listing can live on the instance
            listing = self.__dict__["_listing"] = _elements(self)
        elif len(listing) > limit:
            raise BudgetExceeded(len(listing), limit, what=f"carrier {type(self).__name__}")
        return listing

    def listed(self, v) -> bool:
        """Membership in the canonical enumeration (stricter than ``in``
        for function spaces, which admit graphs with extra entries)."""
        self.elements()
        return v in _element_set(self)

    def __iter__(self):
        return iter(self.elements())


@lru_cache(maxsize=4096)
def _elements(c: Carrier) -> tuple:
    return tuple(sorted(c._generate(), key=sort_key))


@lru_cache(maxsize=4096)
def _element_set(c: Carrier) -> frozenset:
    return frozenset(_elements(c))


def as_carrier(X) -> Carrier:
    if isinstance(X, Carrier):
        return X
    return Finite(frozenset(X))


@dataclass(frozen=True)
class Finite(Carrier):
    items: frozenset

    def __contains__(self, v):
        return v in self.items

    @property
    def size(self):
        return len(self.items)

    def _generate(self):
        return iter(self.items)


@dataclass(frozen=True)
class Star(Carrier):
    """``X*``: finite subsets of the base carrier."""
    base: Carrier

    def __contains__(self, v):
        return isinstance(v, frozenset) and all(e in self.base for e in v)

    @property
    def size(self):
        return 2 ** self.base.size

    def _generate(self):
        xs = self.base.elements()
        for r in range(len(xs) + 1):
            for combo in itertools.combinations(xs, r):
                yield frozenset(combo)


@dataclass(frozen=True)
class Sum(Carrier):
    left: Carrier
    right: Carrier

    def __contains__(self, v):
        if not (isinstance(v, tuple) and isinstance(v[0], int) and not isinstance(v[0], bool)):
            return False
        if v[0] == 0:
            return v[1] in self.left
        if v[0] == 1:
            return v[1] in self.right
        return False

    @property
    def size(self):
        return self.left.size + self.right.size

    def _generate(self):
        yield from ((0, x) for x in self.left)
        yield from ((1, y) for y in self.right)


@dataclass(frozen=True)
class Prod(Carrier):
    left: Carrier
    right: Carrier

    def __contains__(self, v):
        return isinstance(v, tuple) and v[0] in self.left and v[1] in self.right

    @property
    def size(self):
        return self.left.size * self.right.size

    def _generate(self):
        return itertools.product(self.left, self.right)


@dataclass(frozen=True)
class FuncSpace(Carrier):
    dom: Carrier
    cod: Carrier

    def __contains__(self, v):
        if not is_graph(v):
            return False
        table = graph_dict(v)
        for x in self.dom.elements():
            if x not in table or table[x] not in self.cod:
                return False
        return True

    @property
    def size(self):
        return self.cod.size ** self.dom.size

    def _generate(self):
        xs = self.dom.elements()
        for choice in itertools.product(self.cod.elements(), repeat=len(xs)):
            yield frozenset(zip(xs, choice))


@dataclass(frozen=True)
class Union(Carrier):
    parts: frozenset

    def __contains__(self, v):
        return any(v in p for p in self.parts)

    @property
    def size(self):
        return len(_union_set(self))

    def _generate(self):
        return iter(_union_set(self))


@lru_cache(maxsize=4096)
def _union_set(u: Union) -> frozenset:
    out = set()
    for p in u.parts:
        out.update(p.elements())
    return frozenset(out)


# ---------------------------------------------------------------------------
# eager set constructions


def star(X) -> frozenset:
    return frozenset(Star(as_carrier(X)).elements())


def sum_set(X, Y) -> frozenset:
    return frozenset(Sum(as_carrier(X), as_carrier(Y)).elements())


def prod_set(X, Y) -> frozenset:
    return frozenset(Prod(as_carrier(X), as_carrier(Y)).elements())


def func_space(X, Y) -> frozenset:
    return frozenset(FuncSpace(as_carrier(X), as_carrier(Y)).elements())
