from pathlib import Path

import pytest
from hypothesis import given

from generators import formulas
from oracles import sexp_shape
from glivenko import proofio
from glivenko.checker import NJ, NK, check, judgment_matches
from glivenko.derivations import (
    peirce_implies_raa,
    raa_axiom_from_rule,
    raa_implies_tnd,
    tnd_implies_peirce,
)
from glivenko.proof import (
    AndI,
    AxiomPeirce,
    AxiomRAA,
    AxiomTND,
    Classical,
    DanglingLabel,
    Hyp,
    ImpliesE,
    ImpliesI,
    LabelSupply,
    RuleRAA,
    classical_axioms_used,
    graft,
    hyp,
    labels_declared,
    max_label,
    node,
    open_hypotheses,
    open_hypothesis_list,
    proof_height,
    proof_size,
    relabel,
)
from glivenko.syntax import alpha_key, parse_formula
from glivenko.translation import stability_proof, triple_neg_proof

HERE = Path(__file__).parent
F = parse_formula


def figure(name: str) -> tuple[proofio.ProofFile, tuple[int, int]]:
    path = HERE / "figures" / name if (HERE / "figures" / name).exists() else HERE / "proofs" / name
    text = path.read_text()
    return proofio.loads(text), sexp_shape(text)


def test_single_hypothesis():
    p = hyp(F("a"))
    assert (proof_size(p), proof_height(p)) == (1, 0)
    assert open_hypotheses(p) == {alpha_key(F("a")): 1}
    assert classical_axioms_used(p) == set()


@pytest.mark.parametrize("name, build", [
    ("prop2.proof", lambda: triple_neg_proof(F("a"))),
    ("reductio_to_excluded_middle.proof", lambda: raa_implies_tnd(F("a"))),
    ("reductio_axiom_from_rule.proof", lambda: raa_axiom_from_rule(F("p"))),
])
def test_builder_shape_matches_encoded_figure(name, build):
    pf, (size, height) = figure(name)
    p = build()
    assert (proof_size(p), proof_height(p)) == (size, height)
    assert (proof_size(pf.proof), proof_height(pf.proof)) == (size, height)
    assert judgment_matches(check(p, NK), check(pf.proof, NK))


def test_figure_sizes():
    assert (proof_size(triple_neg_proof(F("a"))), proof_height(triple_neg_proof(F("a")))) == (7, 4)
    assert proof_size(triple_neg_proof(F("forall x. p(x) | q"))) == 7
    assert proof_size(raa_implies_tnd(F("a"))) == 14
    assert (proof_size(raa_axiom_from_rule(F("p"))), proof_height(raa_axiom_from_rule(F("p")))) == (5, 3)


def test_open_hypotheses_of_triple_negation():
    assert open_hypothesis_list(triple_neg_proof(F("a"))) == [F("~~~a")]


def test_vacuous_discharge_leaves_hypothesis_open():
    p = node(ImpliesI(F("b"), 1), hyp(F("a")))
    assert open_hypothesis_list(p) == [F("a")]


def test_open_hypotheses_are_a_multiset():
    p = node(AndI(), hyp(F("a")), hyp(F("a")))
    assert open_hypotheses(p)[alpha_key(F("a"))] == 2


def test_dangling_label_raises():
    with pytest.raises(DanglingLabel):
        open_hypothesis_list(hyp(F("a"), 3))


@pytest.mark.parametrize("p, expected", [
    (raa_implies_tnd(F("a")), {Classical.RAA}),
    (peirce_implies_raa(F("p")), {Classical.PEIRCE}),
    (tnd_implies_peirce(F("p"), F("q")), {Classical.TND}),
    (raa_axiom_from_rule(F("p")), {Classical.RAA_RULE}),
    (node(ImpliesE(), node(AxiomTND(F("a"))), node(AxiomRAA(F("a")))), {Classical.TND, Classical.RAA}),
])
def test_classical_axioms_used(p, expected):
    assert classical_axioms_used(p) == expected


def test_iteration_is_preorder():
    p = node(ImpliesE(), hyp(F("a")), hyp(F("a -> b")))
    assert [type(n.rule) for n in p] == [ImpliesE, Hyp, Hyp]
    assert [n.rule.formula for n in list(p)[1:]] == [F("a"), F("a -> b")]


def test_proofs_compare_structurally():
    assert triple_neg_proof(F("a")) == triple_neg_proof(F("a"))
    assert hash(triple_neg_proof(F("a"))) == hash(triple_neg_proof(F("a")))


def test_label_supply():
    s = LabelSupply()
    assert [s(), s(), s()] == [1, 2, 3]
    p = raa_implies_tnd(F("a"))
    assert LabelSupply.after(p)() == max_label(p) + 1


def test_relabel_keeps_judgment():
    p = raa_implies_tnd(F("a"))
    q = relabel(p, LabelSupply(100))
    assert min(labels_declared(q)) >= 100
    assert judgment_matches(check(p, NK), check(q, NK))


def test_graft_replaces_every_copy():
    # both copies of ~~a are replaced, each with its own labels
    target = node(AndI(), hyp(F("~~a")), hyp(F("~~a")))
    repl = triple_neg_proof(F("~a"))
    out = graft(target, F("~~a"), repl, LabelSupply.after(target, repl))
    j = check(out, NJ)
    assert j.conclusion == F("~~a & ~~a")
    assert j.context == (F("~~~~a"), F("~~~~a"))
    labels = labels_declared(out)
    assert len(labels) == len(set(labels))


def test_deep_proof_survives_iteration():
    p = hyp(F("a"))
    for k in range(1, 3000):
        p = node(ImpliesI(F("b"), k), p)
    assert proof_size(p) == 3000 and proof_height(p) == 2999
    assert sum(1 for _ in p) == 3000


def test_rule_nodes_are_frozen():
    r = RuleRAA(F("a"), 1)
    with pytest.raises(AttributeError):
        r.label = 2  # type: ignore[misc]
    assert AxiomPeirce(F("a"), F("b")) == AxiomPeirce(F("a"), F("b"))


@given(formulas)
def test_stability_labels_are_unique(f):
    labels = labels_declared(stability_proof(f))
    assert len(labels) == len(set(labels))
