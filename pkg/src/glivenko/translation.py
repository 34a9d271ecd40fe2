"""The double-negation translation and the intuitionistic proofs it relies on."""

from __future__ import annotations

from typing import Callable, Iterable

from .proof import (
    AndEL,
    AndER,
    AndI,
    ForallE,
    ForallI,
    ImpliesE,
    ImpliesI,
    LabelSupply,
    Proof,
    graft,
    hyp,
    node,
)
from .syntax import (
    And,
    Atom,
    Bottom,
    Exists,
    Forall,
    Formula,
    Implies,
    Or,
    Var,
    all_vars,
    fresh_name,
    is_variable_name,
    neg,
    substitute,
)

Fresh = Callable[[], int]


def nn(f: Formula) -> Formula:
    return neg(neg(f))


def nn_translate(f: Formula) -> Formula:
    match f:
        case Bottom():
            return f
        case Atom():
            return nn(f)
        case And(a, b):
            return And(nn_translate(a), nn_translate(b))
        case Implies(a, b):
            return Implies(nn_translate(a), nn_translate(b))
        case Forall(x, a):
            return Forall(x, nn_translate(a))
        case Or(a, b):
            return nn(Or(nn_translate(a), nn_translate(b)))
        case Exists(x, a):
            return nn(Exists(x, nn_translate(a)))
    raise TypeError(f"not a formula: {f!r}")


def nn_translate_context(gamma: Iterable[Formula]) -> list[Formula]:
    return [nn_translate(f) for f in gamma]


def eigen_for(q: Forall | Exists) -> str:
    """Eigenvariable for opening q: its bound name when that is a variable name."""
    if is_variable_name(q.var):
        return q.var
    return fresh_name("x", all_vars(q))


def triple_neg_proof(a: Formula, fresh: Fresh | None = None) -> Proof:
    """``~~~a |- ~a``."""
    fresh = fresh or LabelSupply()
    k_n, k_a = fresh(), fresh()
    nna = node(ImpliesI(neg(a), k_n), node(ImpliesE(), hyp(a, k_a), hyp(neg(a), k_n)))
    return node(ImpliesI(a, k_a), node(ImpliesE(), nna, hyp(neg(neg(neg(a))))))


def _refute_then_reintroduce(f_nn: Formula, goal: Formula, use: Callable[[Proof], Proof],
                             fresh: Fresh) -> Proof:
    """Derive ``~~goal`` from the open hypothesis ``~~f_nn``.

    ``use`` turns a proof of f_nn (a labelled hypothesis) into a proof of
    goal; the hypothesis and ``~goal`` are then discharged in turn.
    """
    k_f, k_g = fresh(), fresh()
    bot = node(ImpliesE(), use(hyp(f_nn, k_f)), hyp(neg(goal), k_g))
    not_f = node(ImpliesI(f_nn, k_f), bot)
    return node(ImpliesI(neg(goal), k_g), node(ImpliesE(), not_f, hyp(nn(f_nn))))


def stability_proof(f: Formula, fresh: Fresh | None = None) -> Proof:
    """Intuitionistic proof of ``~~F' |- F'`` where F' is the translation of f."""
    fresh = fresh or LabelSupply()
    f_nn = nn_translate(f)
    match f:
        case Bottom():
            k = fresh()
            nn_bot = node(ImpliesI(f, k), hyp(f, k))
            return node(ImpliesE(), nn_bot, hyp(nn(f)))
        case Atom() | Or() | Exists():
            # f_nn is ~~g for some g; triple negation elimination at ~g
            return triple_neg_proof(f_nn.left, fresh)
        case Implies(a, b):
            a_nn, b_nn = f_nn.left, f_nn.right
            k_a = fresh()

            def apply(h: Proof) -> Proof:
                return node(ImpliesE(), hyp(a_nn, k_a), h)

            ih = stability_proof(b, fresh)
            body = graft(ih, nn(b_nn), _refute_then_reintroduce(f_nn, b_nn, apply, fresh), fresh)
            return node(ImpliesI(a_nn, k_a), body)
        case And(a, b):
            left = graft(stability_proof(a, fresh), nn(f_nn.left),
                         _refute_then_reintroduce(f_nn, f_nn.left,
                                                  lambda h: node(AndEL(), h), fresh), fresh)
            right = graft(stability_proof(b, fresh), nn(f_nn.right),
                          _refute_then_reintroduce(f_nn, f_nn.right,
                                                   lambda h: node(AndER(), h), fresh), fresh)
            return node(AndI(), left, right)
        case Forall(x, a):
            z = eigen_for(f)
            a = substitute(a, x, Var(z))
            a_nn = nn_translate(a)
            inst = _refute_then_reintroduce(f_nn, a_nn, lambda h: node(ForallE(Var(z)), h), fresh)
            return node(ForallI(z), graft(stability_proof(a, fresh), nn(a_nn), inst, fresh))
    raise TypeError(f"not a formula: {f!r}")
