"""Builders for the interderivations of the classical axiom families.

Each builder takes arbitrary formulas and returns a proof tree; discharge
labels come from ``fresh`` (a fresh ``LabelSupply`` when omitted).
"""

from __future__ import annotations

from typing import Callable

from .checker import NK, CheckError, check
from .proof import (
    AxiomPeirce,
    AxiomRAA,
    AxiomTND,
    BotE,
    ImpliesE,
    ImpliesI,
    LabelSupply,
    OrE,
    OrIL,
    OrIR,
    Proof,
    RuleRAA,
    hyp,
    labels_declared,
    node,
)
from .syntax import BOT, Bottom, Formula, Implies, Or, neg

Fresh = Callable[[], int]


def raa_rule_from_axiom(a: Formula, body: Proof, label: int) -> Proof:
    """Emulate the rule form of reductio with the axiom ``~~a -> a``.

    ``body`` proves bot from hypotheses ``~a`` labelled ``label``; those are
    discharged by ->i to give ``~~a``, then the axiom fires.
    """
    if label in labels_declared(body):
        raise ValueError(f"label {label} is already declared inside the body")
    try:
        c = check(body, NK, scope={label: neg(a)}).conclusion
    except CheckError as exc:
        raise ValueError(f"body does not check: {exc}") from exc
    if not isinstance(c, Bottom):
        raise ValueError(f"body must conclude bot, not {c}")
    nna = node(ImpliesI(neg(a), label), body)
    return node(ImpliesE(), nna, node(AxiomRAA(a)))


def raa_axiom_from_rule(a: Formula, fresh: Fresh | None = None) -> Proof:
    """``|- ~~a -> a`` using the rule form of reductio once."""
    fresh = fresh or LabelSupply()
    k_neg, k_nn = fresh(), fresh()
    bot = node(ImpliesE(), hyp(neg(a), k_neg), hyp(neg(neg(a)), k_nn))
    return node(ImpliesI(neg(neg(a)), k_nn), node(RuleRAA(a, k_neg), bot))


def raa_implies_tnd(a: Formula, fresh: Fresh | None = None) -> Proof:
    """``|- a | ~a`` from the reductio axiom."""
    fresh = fresh or LabelSupply()
    k_na, k_a, k_ntnd = fresh(), fresh(), fresh()
    tnd = Or(a, neg(a))
    # ~a from [a] and [~(a | ~a)]
    left = node(ImpliesI(a, k_a),
                node(ImpliesE(), node(OrIL(neg(a)), hyp(a, k_a)), hyp(neg(tnd), k_ntnd)))
    # ~~a from [~a] and [~(a | ~a)]
    right = node(ImpliesI(neg(a), k_na),
                 node(ImpliesE(), node(OrIR(a), hyp(neg(a), k_na)), hyp(neg(tnd), k_ntnd)))
    nn_tnd = node(ImpliesI(neg(tnd), k_ntnd), node(ImpliesE(), left, right))
    return node(ImpliesE(), nn_tnd, node(AxiomRAA(tnd)))


def tnd_implies_peirce(p: Formula, q: Formula, fresh: Fresh | None = None) -> Proof:
    """``|- ((p -> q) -> p) -> p`` by cases on ``p | ~p``."""
    fresh = fresh or LabelSupply()
    k_case, k_pp, k_p, k_vac = fresh(), fresh(), fresh(), fresh()
    pq = Implies(p, q)
    premise = Implies(pq, p)
    # p branch: discharge nothing, conclude the law from [p]
    yes = node(ImpliesI(premise, k_vac), hyp(p, k_case))
    # ~p branch: p -> q by ex falso, then apply [(p -> q) -> p]
    p_to_q = node(ImpliesI(p, k_p),
                  node(BotE(q), node(ImpliesE(), hyp(p, k_p), hyp(neg(p), k_case))))
    no = node(ImpliesI(premise, k_pp), node(ImpliesE(), p_to_q, hyp(premise, k_pp)))
    return node(OrE(k_case), node(AxiomTND(p)), yes, no)


def peirce_implies_raa(p: Formula, fresh: Fresh | None = None) -> Proof:
    """``|- ~~p -> p`` from Peirce's law with ``q = bot``."""
    fresh = fresh or LabelSupply()
    k_n, k_nn = fresh(), fresh()
    np_to_p = node(ImpliesI(neg(p), k_n),
                   node(BotE(p), node(ImpliesE(), hyp(neg(p), k_n), hyp(neg(neg(p)), k_nn))))
    return node(ImpliesI(neg(neg(p)), k_nn),
                node(ImpliesE(), np_to_p, node(AxiomPeirce(p, BOT))))


BUILDERS = {
    "raa_to_tnd": (raa_implies_tnd, 1),
    "tnd_to_peirce": (tnd_implies_peirce, 2),
    "peirce_to_raa": (peirce_implies_raa, 1),
    "raa_rule_to_axiom": (raa_axiom_from_rule, 1),
}
