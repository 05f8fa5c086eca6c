"""S-expression surface syntax: values, definition files, expressions, proofs.

Value literals are ``3``, ``(a . b)`` and ``{v1 v2 ...}``.  A definition file
is a sequence of entries::

    (pred NAME :plus {...} :minus {...} :rel ((a b) ...) [:close])
    (family NAME :index (i1 i2 ...) :fibers ((i1 EXPR) ...))
    (map NAME :dom (...) :cod (...) :graph ((i j) ...))
    (realizer NAME :plus VALUE :minus VALUE)
    (proof NAME :concludes (seq EXPR EXPR) :term TERM)

Expressions are names, ``true``, ``false``, ``(and E E)``, ``(or E E)``,
``(imp E E)``, ``(not E)``, ``(forall U E)``, ``(exists U E)``,
``(reindex U E)`` and the anonymous forms of the entries above.  The printer
also emits ``(forall* P ...)`` / ``(exists* P ...)`` for single quantifier
fibers so that everything it prints parses back to an equal structure.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union as TUnion

from . import connectives as C
from . import proofc as PC
from . import quantifiers as Q
from .errors import NotUpwardClosed, OutOfCarrier, ParseError, TriposError
from .predicates import (
    FiniteMap,
    IndexedPred,
    Pred,
    TablePred,
    as_family,
    label_key,
    mk_pred,
    reindex,
    sort_labels,
    upward_close,
)
from .realizers import RealizerPair
from .values import Finite, canonical, is_value, show

# ---------------------------------------------------------------------------
# reader

_TOKEN = re.compile(r"\s+|;[^\n]*|(?P<tok>[(){}]|[^\s(){};]+)")


@dataclass
class Node:
    kind: str  # "list", "set" or "atom"
    line: int
    col: int
    items: list = field(default_factory=list)
    text: str = ""

    def error(self, message) -> ParseError:
        return ParseError(message, self.line, self.col)

    def is_atom(self, text=None) -> bool:
        return self.kind == "atom" and (text is None or self.text == text)


def tokenize(src: str):
    pos, line, line_start = 0, 1, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:  # pragma: no cover - the pattern matches every character class
            raise ParseError("unreadable input", line, pos - line_start + 1)
        if m.group("tok"):
            yield m.group("tok"), line, pos - line_start + 1
        chunk = m.group(0)
        nl = chunk.count("\n")
        if nl:
            line += nl
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()


def read_all(src: str) -> list:
    """Parse every top-level form in ``src``."""
    stack = [Node("list", 1, 1)]
    closers = {")": "list", "}": "set"}
    for tok, line, col in tokenize(src):
        if tok in ("(", "{"):
            node = Node("list" if tok == "(" else "set", line, col)
            stack[-1].items.append(node)
            stack.append(node)
        elif tok in closers:
            if len(stack) == 1:
                raise ParseError(f"unexpected '{tok}'", line, col)
            node = stack.pop()
            if node.kind != closers[tok]:
                raise ParseError(f"'{tok}' closes a {node.kind} opened at "
                                 f"{node.line}:{node.col}", line, col)
        else:
            stack[-1].items.append(Node("atom", line, col, text=tok))
    if len(stack) > 1:
        node = stack[-1]
        raise ParseError("unclosed form", node.line, node.col)
    return stack[0].items


def read_one(src: str) -> Node:
    forms = read_all(src)
    if len(forms) != 1:
        raise ParseError(f"expected exactly one form, found {len(forms)}", 1, 1)
    return forms[0]


# ---------------------------------------------------------------------------
# values and labels


def node_value(n: Node):
    if n.kind == "atom":
        if n.text.isdigit():
            return int(n.text)
        raise n.error(f"'{n.text}' is not a value")
    if n.kind == "set":
        return frozenset(node_value(x) for x in n.items)
    if len(n.items) == 3 and n.items[1].is_atom("."):
        return (node_value(n.items[0]), node_value(n.items[2]))
    raise n.error("a pair is written (a . b)")


def parse_value(src: str):
    return node_value(read_one(src))


def node_label(n: Node):
    if n.kind == "atom":
        return int(n.text) if n.text.isdigit() else n.text
    if n.kind == "list" and len(n.items) == 3 and n.items[1].is_atom("."):
        return (node_label(n.items[0]), node_label(n.items[2]))
    raise n.error("expected an index label")


def show_label(label) -> str:
    if isinstance(label, tuple):
        return f"({show_label(label[0])} . {show_label(label[1])})"
    return str(label)


def _labels(n: Node) -> tuple:
    if n.kind != "list":
        raise n.error("expected a list of labels")
    return tuple(node_label(x) for x in n.items)


def _options(n: Node, start: int, flags=()) -> dict:
    opts, items, k = {}, n.items, start
    while k < len(items):
        key = items[k]
        if not (key.is_atom() and key.text.startswith(":")):
            raise key.error("expected a :keyword")
        if key.text[1:] in flags:
            opts[key.text[1:]] = True
            k += 1
            continue
        if k + 1 >= len(items):
            raise key.error(f"{key.text} needs an argument")
        opts[key.text[1:]] = items[k + 1]
        k += 2
    return opts


def _need(opts: dict, n: Node, *keys):
    missing = [k for k in keys if k not in opts]
    if missing:
        raise n.error(f"missing :{missing[0]}")
    return [opts[k] for k in keys]


def _pairs(n: Node) -> list:
    if n.kind != "list" or any(x.kind != "list" or len(x.items) != 2 for x in n.items):
        raise n.error("expected a list of two-element lists")
    return [(x.items[0], x.items[1]) for x in n.items]


# ---------------------------------------------------------------------------
# environment and evaluation

Term = TUnion[Pred, IndexedPred]


@dataclass
class Environment:
    preds: dict = field(default_factory=dict)
    families: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    realizers: dict = field(default_factory=dict)
    proofs: dict = field(default_factory=dict)
    conclusions: dict = field(default_factory=dict)
    order: list = field(default_factory=list)  # (kind, name) in file order

    def define(self, kind: str, name: str, value, node: Node):
        table = getattr(self, kind)
        if name in table:
            raise node.error(f"{name} is defined twice")
        table[name] = value
        self.order.append((kind, name))


def _pred_body(n: Node, start: int) -> TablePred:
    opts = _options(n, start, flags=("close",))
    plus, minus, rel = _need(opts, n, "plus", "minus", "rel")
    plus, minus = node_value(plus), node_value(minus)
    if not (isinstance(plus, frozenset) and isinstance(minus, frozenset)):
        raise n.error(":plus and :minus must be set literals")
    entries = [(node_value(a), node_value(b)) for a, b in _pairs(rel)]
    if opts.get("close"):
        return upward_close(plus, minus, entries)
    return mk_pred(plus, minus, entries)


def _map_body(n: Node, start: int) -> FiniteMap:
    opts = _options(n, start)
    dom, cod, graph = _need(opts, n, "dom", "cod", "graph")
    try:
        return FiniteMap.make(_labels(dom), _labels(cod),
                              {node_label(i): node_label(j) for i, j in _pairs(graph)})
    except TriposError as exc:
        raise n.error(str(exc)) from exc


def _family_body(n: Node, start: int, env: Environment) -> IndexedPred:
    opts = _options(n, start)
    index, fibers = _need(opts, n, "index", "fibers")
    labels = _labels(index)
    table = {}
    for i, e in _pairs(fibers):
        p = eval_node(e, env)
        if isinstance(p, IndexedPred):
            raise e.error("a fiber must be a single predicate")
        table[node_label(i)] = p
    if set(table) != set(labels):
        raise n.error("fibers must be given exactly for the index")
    return IndexedPred.from_dict(table)


def eval_map(n: Node, env: Environment) -> FiniteMap:
    if n.kind == "atom":
        if n.text not in env.maps:
            raise n.error(f"unknown map {n.text}")
        return env.maps[n.text]
    if n.kind == "list" and n.items and n.items[0].is_atom("map"):
        return _map_body(n, 1)
    raise n.error("expected a map")


def _lift2(a: Term, b: Term):
    if isinstance(a, IndexedPred) and not isinstance(b, IndexedPred):
        b = IndexedPred(a.index, (b,) * len(a.index))
    elif isinstance(b, IndexedPred) and not isinstance(a, IndexedPred):
        a = IndexedPred(b.index, (a,) * len(b.index))
    return a, b


_BINARY = {"and": C.conj, "or": C.disj, "imp": C.impl}


def eval_node(n: Node, env: Environment) -> Term:
    if n.kind == "atom":
        if n.text == "true":
            return C.TRUTH
        if n.text == "false":
            return C.FALSITY
        if n.text in env.preds:
            return env.preds[n.text]
        if n.text in env.families:
            return env.families[n.text]
        raise n.error(f"unknown predicate or family {n.text}")
    if n.kind != "list" or not n.items or not n.items[0].is_atom():
        raise n.error("expected an expression")
    head, args = n.items[0].text, n.items[1:]
    try:
        if head in _BINARY:
            if len(args) != 2:
                raise n.error(f"{head} takes two arguments")
            a, b = _lift2(eval_node(args[0], env), eval_node(args[1], env))
            return _BINARY[head](a, b)
        if head == "not":
            if len(args) != 1:
                raise n.error("not takes one argument")
            return C.neg(eval_node(args[0], env))
        if head in ("forall", "exists", "reindex"):
            if len(args) != 2:
                raise n.error(f"{head} takes a map and an expression")
            u, f = eval_map(args[0], env), as_family(eval_node(args[1], env))
            op = {"forall": Q.forall_along, "exists": Q.exists_along}.get(head)
            return op(u, f) if op else reindex(u, f)
        if head in ("forall*", "exists*"):
            preds = []
            for a in args:
                p = eval_node(a, env)
                if isinstance(p, IndexedPred):
                    raise a.error("quantifier fibers take single predicates")
                preds.append(p)
            cls = Q.ForallPred if head == "forall*" else Q.ExistsPred
            return cls(frozenset(preds))
        if head == "pred":
            return _pred_body(n, 1)
        if head == "family":
            return _family_body(n, 1, env)
    except (ParseError, NotUpwardClosed, OutOfCarrier):
        raise
    except TriposError as exc:
        raise n.error(str(exc)) from exc
    raise n.error(f"unknown form {head}")


def eval_expr(src: str, env: Environment) -> Term:
    return eval_node(read_one(src), env)


_PROOF_UNARY = {"andE1": PC.AndE1, "andE2": PC.AndE2, "impI": PC.ImpI}
_PROOF_BINARY = {"andI": PC.AndI, "orE": PC.OrE, "impE": PC.ImpE, "cut": PC.Cut}
_PROOF_QUANT = {"forallI": PC.ForallI, "forallE": PC.ForallE,
                "existsI": PC.ExistsI, "existsE": PC.ExistsE}


def eval_proof(n: Node, env: Environment) -> PC.ProofTerm:
    if n.kind != "list" or not n.items or not n.items[0].is_atom():
        raise n.error("expected a proof term")
    head, args = n.items[0].text, n.items[1:]

    def arity(k):
        if len(args) != k:
            raise n.error(f"{head} takes {k} arguments")

    def fam(x):
        return as_family(eval_node(x, env))

    if head in ("hyp", "truthI"):
        arity(1)
        return (PC.Hyp if head == "hyp" else PC.TruthI)(fam(args[0]))
    if head == "exFalso":
        arity(2)
        return PC.ExFalso(eval_proof(args[0], env), fam(args[1]))
    if head in ("orI1", "orI2"):
        arity(2)
        return (PC.OrI1 if head == "orI1" else PC.OrI2)(eval_proof(args[0], env), fam(args[1]))
    if head in _PROOF_UNARY:
        arity(1)
        return _PROOF_UNARY[head](eval_proof(args[0], env))
    if head in _PROOF_BINARY:
        arity(2)
        return _PROOF_BINARY[head](eval_proof(args[0], env), eval_proof(args[1], env))
    if head in _PROOF_QUANT:
        arity(3)
        return _PROOF_QUANT[head](eval_map(args[0], env), fam(args[1]),
                                  eval_proof(args[2], env))
    if head == "reindex":
        arity(2)
        return PC.Reindex(eval_map(args[0], env), eval_proof(args[1], env))
    if head == "proof":
        return _proof_entry(n, env, anonymous=True)[1]
    raise n.error(f"unknown proof rule {head}")


def _proof_entry(n: Node, env: Environment, anonymous=False):
    start = 1 if anonymous else 2
    opts = _options(n, start)
    (term,) = _need(opts, n, "term")
    proof = eval_proof(term, env)
    concl = None
    if "concludes" in opts:
        c = opts["concludes"]
        if not (c.kind == "list" and len(c.items) == 3 and c.items[0].is_atom()
                and c.items[0].text.lower() == "seq"):
            raise c.error("expected (seq ANTECEDENT CONSEQUENT)")
        concl = PC.Sequent(as_family(eval_node(c.items[1], env)),
                           as_family(eval_node(c.items[2], env)))
    return concl, proof


def load(src: str, env: Environment = None) -> Environment:
    """Evaluate a definition file."""
    env = env if env is not None else Environment()
    for n in read_all(src):
        if n.kind != "list" or len(n.items) < 2 or not n.items[0].is_atom() \
                or not n.items[1].is_atom():
            raise n.error("expected (KIND NAME ...)")
        kind, name = n.items[0].text, n.items[1].text
        try:
            if kind == "pred":
                env.define("preds", name, _pred_body(n, 2), n)
            elif kind == "family":
                env.define("families", name, _family_body(n, 2, env), n)
            elif kind == "map":
                env.define("maps", name, _map_body(n, 2), n)
            elif kind == "realizer":
                opts = _options(n, 2)
                plus, minus = _need(opts, n, "plus", "minus")
                env.define("realizers", name,
                           RealizerPair(node_value(plus), node_value(minus)), n)
            elif kind == "proof":
                concl, proof = _proof_entry(n, env)
                env.define("proofs", name, proof, n)
                env.conclusions[name] = concl
            else:
                raise n.error(f"unknown entry kind {kind}")
        except ParseError:
            raise
        except (NotUpwardClosed, OutOfCarrier) as exc:
            exc.args = (f"{kind} {name} (line {n.line}): {exc}",)
            raise
        except TriposError as exc:
            raise n.error(f"{kind} {name}: {exc}") from exc
    return env


# ---------------------------------------------------------------------------
# printer


def _show_rel(rel) -> str:
    return "(" + " ".join(f"({show(a)} {show(b)})" for a, b in canonical(rel)) + ")"


def show_pred(p: Pred) -> str:
    if p == C.TRUTH:
        return "true"
    if p == C.FALSITY:
        return "false"
    if isinstance(p, TablePred):
        if not (isinstance(p.plus, Finite) and isinstance(p.minus, Finite)):
            raise TriposError("table predicates print only over explicit carriers")
        return (f"(pred :plus {show(p.plus.items)} :minus {show(p.minus.items)} "
                f":rel {_show_rel(p.rel)})")
    for cls, head in ((C.Conj, "and"), (C.Disj, "or"), (C.Impl, "imp")):
        if isinstance(p, cls):
            return f"({head} {show_pred(p.p)} {show_pred(p.q)})"
    for cls, head in ((Q.ForallPred, "forall*"), (Q.ExistsPred, "exists*")):
        if isinstance(p, cls):
            return "(" + " ".join([head] + sorted(show_pred(x) for x in p.preds)) + ")"
    raise TriposError(f"cannot print {type(p).__name__}")


def show_family(f: IndexedPred) -> str:
    idx = " ".join(show_label(i) for i in f.index)
    fibers = " ".join(f"({show_label(i)} {show_pred(p)})" for i, p in f.items())
    return f"(family :index ({idx}) :fibers ({fibers}))"


def show_term(t: Term) -> str:
    return show_family(t) if isinstance(t, IndexedPred) else show_pred(t)


def show_map(u: FiniteMap) -> str:
    dom = " ".join(show_label(i) for i in u.dom)
    cod = " ".join(show_label(j) for j in u.cod)
    graph = " ".join(f"({show_label(i)} {show_label(j)})" for i, j in u.graph)
    return f"(map :dom ({dom}) :cod ({cod}) :graph ({graph}))"


def show_realizer(r: RealizerPair) -> str:
    return str(r)


def show_proof(t: PC.ProofTerm) -> str:
    if isinstance(t, (PC.Hyp, PC.TruthI)):
        return f"({t.rule} {show_family(t.phi)})"
    if isinstance(t, PC.ExFalso):
        return f"(exFalso {show_proof(t.premise)} {show_family(t.psi)})"
    if isinstance(t, (PC.OrI1, PC.OrI2)):
        return f"({t.rule} {show_proof(t.premise)} {show_family(t.other)})"
    if isinstance(t, (PC.ForallI, PC.ExistsE)):
        return f"({t.rule} {show_map(t.u)} {show_family(t.psi)} {show_proof(t.premise)})"
    if isinstance(t, (PC.ForallE, PC.ExistsI)):
        return f"({t.rule} {show_map(t.u)} {show_family(t.phi)} {show_proof(t.premise)})"
    if isinstance(t, PC.Reindex):
        return f"(reindex {show_map(t.u)} {show_proof(t.premise)})"
    return "(" + " ".join([t.rule] + [show_proof(c) for c in t.children()]) + ")"


def describe_pred(p: Pred, limit: int = 4096) -> str:
    """Carriers and, when small enough, the relation table of ``p``."""
    lines = [f"plus: {_show_carrier(p.plus, limit)}",
             f"minus: {_show_carrier(p.minus, limit)}"]
    try:
        lines.append(f"rel: {_show_rel(p.table(limit))}")
    except TriposError as exc:
        lines.append(f"rel: <not tabulated: {exc}>")
    return "\n".join(lines)


def _show_carrier(c, limit) -> str:
    if c.size > limit:
        return f"<{c.size} elements>"
    return show(frozenset(c.elements()))
