"""Definition-unfolding oracles, independent of the library.

Nothing here imports ``dsttripos``.  A raw predicate is a triple
``(plus, minus, rel)`` of frozensets; composite carriers and relations are
computed by transcribing the defining clauses literally, with their own
powerset, tagging and graph-lookup helpers.
"""
from itertools import combinations, product


def powerset(xs):
    xs = list(xs)
    return frozenset(frozenset(c) for r in range(len(xs) + 1) for c in combinations(xs, r))


def tagged(xs, ys):
    return frozenset({(0, x) for x in xs} | {(1, y) for y in ys})


def untag(w):
    return (frozenset(v for t, v in w if t == 0), frozenset(v for t, v in w if t == 1))


def lookup(graph, x):
    hits = [v for k, v in graph if k == x]
    assert len(hits) == 1, (graph, x)
    return hits[0]


def bracket(x, y):
    out = set()
    for z in x:
        out |= lookup(z, y)
    return frozenset(out)


def graphs(dom, cod):
    dom = list(dom)
    return frozenset(frozenset(zip(dom, vals)) for vals in product(list(cod), repeat=len(dom)))


def rel_of(p):
    return lambda a, b: (a, b) in p[2]


# --- connectives -----------------------------------------------------------


def conj(p, q):
    plus, minus = tagged(p[0], q[0]), tagged(p[1], q[1])
    P, Q = rel_of(p), rel_of(q)

    def holds(w, ik):
        n, m = untag(w)
        i, k = ik
        return (i == 0 and P(n, k)) or (i == 1 and Q(m, k))

    return plus, minus, frozenset((w, b) for w in powerset(plus) for b in minus if holds(w, b))


def disj(p, q):
    plus = tagged(p[0], q[0])
    minus = frozenset(product(p[1], q[1]))
    P, Q = rel_of(p), rel_of(q)

    def holds(w, kl):
        n, m = untag(w)
        return P(n, kl[0]) or Q(m, kl[1])

    return plus, minus, frozenset((w, b) for w in powerset(plus) for b in minus if holds(w, b))


def impl_minus(p, q):
    return frozenset(product(powerset(p[0]), q[1]))


def impl_holds(p, q, w, ab):
    """Implication is only ever evaluated pointwise: its carriers are huge."""
    e_plus, e_minus = untag(w)
    a, b = ab
    if all((a, c) in p[2] for c in bracket(e_minus, ab)):
        return (bracket(e_plus, a), b) in q[2]
    return True


def impl_plus_member(p, q, v):
    """Is ``v`` an element of the positive carrier (exact-domain graphs)?"""
    t, g = v
    pp = powerset(p[0])
    if t == 0:
        return g in graphs(pp, powerset(q[0]))
    return g in graphs(product(pp, q[1]), powerset(p[1]))


# --- quantifiers -------------------------------------------------------------


def forall(fibers):
    """``fibers`` are the raw predicates over one point of the codomain."""
    minus = frozenset().union(*[f[1] for f in fibers]) if fibers else frozenset()
    if fibers:
        common = frozenset.intersection(*[powerset(f[0]) for f in fibers])
        plus = frozenset(frozenset({(0, s)}) for s in common)
    else:
        plus = frozenset({frozenset()})

    def holds(a, b):
        return all((bracket(a, 0), b) in f[2] for f in fibers if b in f[1])

    return plus, minus, frozenset((a, b) for a in powerset(plus) for b in minus if holds(a, b))


def exists(fibers):
    stars = [powerset(f[0]) for f in fibers]
    plus = frozenset().union(*stars) if fibers else frozenset()
    points = sorted(plus, key=lambda s: (len(s), sorted(s)))
    options = []
    for s in points:
        allowed = [powerset(f[1]) for f, st in zip(fibers, stars) if s in st]
        options.append(frozenset.intersection(*allowed))
    minus = frozenset(frozenset(zip(points, vals)) for vals in product(*[list(o) for o in options]))

    def holds(a, b):
        return any(s in st and all((s, c) in f[2] for c in lookup(b, s))
                   for f, st in zip(fibers, stars) for s in a)

    return plus, minus, frozenset((a, b) for a in powerset(plus) for b in minus if holds(a, b))


# --- the realization condition -----------------------------------------------


def realizes(e_plus, e_minus, pairs):
    """``pairs`` is a list of raw (antecedent, consequent) fibers."""
    for p, q in pairs:
        for a in powerset(p[0]):
            for b in q[1]:
                if all((a, c) in p[2] for c in lookup(e_minus, (a, b))):
                    if (lookup(e_plus, a), b) not in q[2]:
                        return False
    return True
