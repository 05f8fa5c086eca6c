"""Command line front end.

Exit codes: 0 holds or passes, 1 fails (with a counterexample), 2 budget
exceeded, 3 malformed input.
"""
from __future__ import annotations

import argparse
import sys

from . import proofc as PC
from .checker import DEFAULT_BUDGET, check_realizes, decide_entails
from .errors import (
    BudgetExceeded,
    CheckFailed,
    IllTyped,
    NotUpwardClosed,
    OutOfCarrier,
    ParseError,
    TriposError,
)
from .laws import Corpus, law_suite
from .predicates import IndexedPred, as_family
from .realizers import RealizerPair
from .syntax import (
    _lift2,
    describe_pred,
    eval_node,
    load,
    node_value,
    read_one,
    show_label,
    show_term,
)

OK, FAILS, BUDGET, MALFORMED = 0, 1, 2, 3


class Usage(Exception):
    pass


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _env(path):
    return load(_read(path))


def _sequent(env, ante, cons):
    phi, psi = _lift2(eval_node(read_one(ante), env), eval_node(read_one(cons), env))
    return as_family(phi), as_family(psi)


def _realizer(env, text):
    if text in env.realizers:
        return env.realizers[text]
    n = read_one(text)
    if n.kind == "list" and n.items and n.items[0].is_atom("realizer"):
        items = n.items[1:]
        opts = {items[k].text: items[k + 1] for k in range(0, len(items) - 1, 2)}
        if set(opts) != {":plus", ":minus"}:
            raise n.error("expected (realizer :plus G :minus G)")
        return RealizerPair(node_value(opts[":plus"]), node_value(opts[":minus"]))
    raise n.error(f"unknown realizer {text}")


def cmd_validate(args, out):
    try:
        env = _env(args.file)
    except (NotUpwardClosed, OutOfCarrier) as exc:
        out.write(f"invalid: {exc}\n")
        return FAILS
    for kind, name in env.order:
        out.write(f"ok {kind[:-1] if kind != 'families' else 'family'} {name}\n")
    out.write(f"valid: {len(env.order)} entries\n")
    return OK


def cmd_check(args, out):
    env = _env(args.file)
    phi, psi = _sequent(env, *args.seq)
    v = check_realizes(_realizer(env, args.realizer), phi, psi)
    out.write(("holds" if v else v.describe()) + "\n")
    return OK if v else FAILS


def cmd_decide(args, out):
    env = _env(args.file)
    phi, psi = _sequent(env, *args.seq)
    r = decide_entails(phi, psi, args.budget, strategy=args.strategy)
    if r is None:
        out.write("no realizer in canonical space\n")
        return FAILS
    out.write(f"realizer found\n{r}\n")
    return OK


def cmd_laws(args, out):
    corpus = Corpus.from_env(_env(args.file)) if args.file else Corpus()
    report = law_suite(corpus, args.seed)
    out.write(report.render())
    return OK if report.ok else FAILS


def cmd_compile(args, out):
    env = _env(args.file)
    if args.proof not in env.proofs:
        raise Usage(f"no proof named {args.proof}")
    term = env.proofs[args.proof]
    seq = PC.infer(term)
    stated = env.conclusions.get(args.proof)
    if stated is not None and stated != seq:
        raise IllTyped(term, f"proof {args.proof} does not conclude its stated sequent")
    r = PC.compile_proof(term)
    out.write(f"{r}\n")
    return OK


def cmd_show(args, out):
    env = _env(args.file)
    t = eval_node(read_one(args.expr), env)
    out.write(show_term(t) + "\n")
    fibers = t.items() if isinstance(t, IndexedPred) else [(None, t)]
    for i, p in fibers:
        if i is not None:
            out.write(f"fiber {show_label(i)}:\n")
        for line in describe_pred(p).splitlines():
            out.write(f"  {line}\n")
    return OK


def build_parser():
    ap = argparse.ArgumentParser(prog="dsttripos",
                                 description="Finite predicates, realizers and entailment checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="load a file, validating every entry")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("check", help="does a realizer witness an entailment")
    p.add_argument("file")
    p.add_argument("--seq", nargs=2, required=True, metavar=("PHI", "PSI"))
    p.add_argument("--realizer", required=True, help="a realizer name or literal")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("decide", help="search for a realizer of an entailment")
    p.add_argument("file")
    p.add_argument("--seq", nargs=2, required=True, metavar=("PHI", "PSI"))
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--strategy", choices=("monotone", "exhaustive"), default="monotone")
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("laws", help="run the law battery, optionally over a corpus file")
    p.add_argument("file", nargs="?")
    p.add_argument("--seed", default="0")
    p.set_defaults(fn=cmd_laws)

    p = sub.add_parser("compile", help="compile a proof to a realizer")
    p.add_argument("file")
    p.add_argument("--proof", required=True)
    p.set_defaults(fn=cmd_compile)

    p = sub.add_parser("show", help="evaluate and print an expression")
    p.add_argument("file")
    p.add_argument("--expr", required=True)
    p.set_defaults(fn=cmd_show)
    return ap


def run(argv, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse has already printed usage
        return OK if exc.code in (0, None) else MALFORMED
    try:
        return args.fn(args, out)
    except BudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}\n")
        return BUDGET
    except CheckFailed as exc:
        err.write(f"internal check failed: {exc}\n")
        return FAILS
    except ParseError as exc:
        err.write(f"parse error at line {exc.line}, column {exc.col}: {exc.message}\n")
        return MALFORMED
    except (TriposError, Usage, OSError) as exc:
        err.write(f"error: {exc}\n")
        return MALFORMED


def main(argv=None):
    sys.exit(run(argv if argv is not None else sys.argv[1:]))


if __name__ == "__main__":
    main()
