"""Finite Dialectica-style predicates, realizers, quantifiers and proof extraction."""
from .checker import Verdict, check_realizes, decide_entails, greatest_realizer
from .connectives import (
    FALSITY,
    TRUTH,
    case_realizers,
    compose_realizers,
    conj,
    curry,
    disj,
    ex_falso,
    id_realizer,
    impl,
    inj_realizer,
    neg,
    pair_realizers,
    proj_realizer,
    truth_intro,
    uncurry,
)
from .errors import *  # noqa: F401,F403
from .laws import Corpus, law_suite
from .predicates import FiniteMap, IndexedPred, Pred, TablePred, mk_pred, point, reindex, \
    upward_close
from .proofc import compile_proof, infer, type_check
from .quantifiers import (
    Square,
    beck_chevalley,
    exists_along,
    exists_transpose,
    forall_along,
    forall_transpose,
    pullback,
)
from .realizers import RealizerPair
from .syntax import load, parse_value, show_term
from .values import show, tabulate

__version__ = "0.1.0"
