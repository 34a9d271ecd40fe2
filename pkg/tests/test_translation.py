import pytest
from hypothesis import given

from generators import formulas, terms
from glivenko.checker import NJ, NK, Judgment, check, check_sequent, judgment_matches
from glivenko.proof import classical_axioms_used, proof_size
from glivenko.syntax import alpha_eq, free_vars, neg, parse_formula, substitute
from glivenko.translation import (
    eigen_for,
    nn,
    nn_translate,
    nn_translate_context,
    stability_proof,
    triple_neg_proof,
)

F = parse_formula


@pytest.mark.parametrize("src, out", [
    ("bot", "bot"),
    ("a", "~~a"),
    ("a | ~a", "~~(~~a | ~~~a)"),
    ("(forall x. p(x)) -> q", "(forall x. ~~p(x)) -> ~~q"),
    ("a & b", "~~a & ~~b"),
    ("exists x. p(x)", "~~(exists x. ~~p(x))"),
])
def test_translate(src, out):
    assert nn_translate(F(src)) == F(out)


def test_translate_context():
    assert nn_translate_context([]) == []
    assert nn_translate_context([F("a"), F("a")]) == [F("~~a"), F("~~a")]
    assert nn_translate_context([F("~a")]) == [F("~~~a")]


@pytest.mark.parametrize("a", ["a", "~p", "forall x. p(x) | q"])
def test_triple_negation(a):
    f = F(a)
    p = triple_neg_proof(f)
    assert check(p, NJ) == Judgment((neg(neg(neg(f))),), neg(f))
    assert proof_size(p) == 7


@pytest.mark.parametrize("src, ctx, concl", [
    ("bot", "~~bot", "bot"),
    ("a", "~~~~a", "~~a"),
    ("a -> b", "~~(~~a -> ~~b)", "~~a -> ~~b"),
    ("a & b", "~~(~~a & ~~b)", "~~a & ~~b"),
    ("a | b", "~~~~(~~a | ~~b)", "~~(~~a | ~~b)"),
    ("forall x. p(x)", "~~(forall x. ~~p(x))", "forall x. ~~p(x)"),
    ("exists x. p(x)", "~~~~(exists x. ~~p(x))", "~~(exists x. ~~p(x))"),
])
def test_stability_cases(src, ctx, concl):
    p = stability_proof(F(src))
    assert check_sequent(p, NJ, Judgment((F(ctx),), F(concl)), context_as_set=True)


def test_conjunction_case_uses_the_hypothesis_twice():
    j = check(stability_proof(F("a & b")), NJ)
    assert len(j.context) == 2
    assert judgment_matches(j, Judgment((F("~~(~~a & ~~b)"),), F("~~a & ~~b")), True)


def test_stability_under_non_variable_binder():
    # the binder name c is not a variable name, so a fresh eigenvariable is used
    f = F("forall c. p(c)")
    assert eigen_for(f) != "c"
    p = stability_proof(f)
    assert check_sequent(p, NJ, Judgment((nn(nn_translate(f)),), nn_translate(f)), True)


def test_stability_with_free_variables():
    f = F("forall x. r(x, y) -> exists y. r(y, x)")
    f_nn = nn_translate(f)
    j = check(stability_proof(f), NJ)
    assert judgment_matches(j, Judgment((nn(f_nn),), f_nn), True)
    assert j.free_vars() == {"y"}


@given(formulas)
def test_negation_commutes(f):
    assert nn_translate(neg(f)) == neg(nn_translate(f))


@given(formulas)
def test_free_variables_preserved(f):
    assert free_vars(nn_translate(f)) == free_vars(f)


@given(formulas, terms)
def test_substitution_commutes(f, t):
    assert alpha_eq(nn_translate(substitute(f, "x", t)), substitute(nn_translate(f), "x", t))


@given(formulas)
def test_stability_is_intuitionistic(f):
    f_nn = nn_translate(f)
    p = stability_proof(f)
    j = check(p, NJ)
    assert judgment_matches(j, Judgment((nn(f_nn),), f_nn), context_as_set=True)
    assert classical_axioms_used(p) == set()
    assert judgment_matches(check(p, NK), j)
