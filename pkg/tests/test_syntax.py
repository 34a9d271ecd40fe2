import pytest
from hypothesis import given
from hypothesis import strategies as st

from generators import formulas, terms
from glivenko.syntax import (
    BOT,
    And,
    Atom,
    Bottom,
    Exists,
    Fn,
    Forall,
    Implies,
    Or,
    ParseError,
    Var,
    alpha_eq,
    alpha_key,
    free_vars,
    fresh_name,
    is_variable_name,
    neg,
    parse_formula,
    parse_term,
    print_formula,
    substitute,
)

a, b, q = Atom("a"), Atom("b"), Atom("q")
x, y = Var("x"), Var("y")
c = Fn("c")


def p(*args):
    return Atom("p", args)


@pytest.mark.parametrize("text, expected", [
    ("bot", BOT),
    ("~a -> bot", Implies(Implies(a, BOT), BOT)),
    ("forall x. p(x) -> q", Forall("x", Implies(p(x), q))),
    ("a -> b -> a", Implies(a, Implies(b, a))),
    ("a | b | q", Or(Or(a, b), q)),
    ("a & b | q", Or(And(a, b), q)),
    ("~a & b", And(neg(a), b)),
    ("(forall x. p(x)) & q", And(Forall("x", p(x)), q)),
    ("p(c, f(y))", Atom("p", (c, Fn("f", (y,))))),
    ("¬a ∧ b → ⊥", Implies(And(neg(a), b), BOT)),
    ("∃y. ∀x. p(x, y)", Exists("y", Forall("x", p(x, y)))),
])
def test_parse(text, expected):
    assert parse_formula(text) == expected


@pytest.mark.parametrize("f, text", [
    (BOT, "bot"),
    (Implies(Implies(a, BOT), BOT), "~~a"),
    (Or(a, Implies(a, BOT)), "a | ~a"),
    (Implies(Forall("x", p(x)), q), "(forall x. p(x)) -> q"),
    (Implies(Implies(a, b), a), "(a -> b) -> a"),
    (neg(And(a, b)), "~(a & b)"),
])
def test_print(f, text):
    assert print_formula(f) == text


def test_print_unicode():
    assert print_formula(Implies(neg(a), Exists("x", p(x))), unicode=True) == "¬a → (∃x. p(x))"


@pytest.mark.parametrize("text", [
    "", "a ->", "(a", "a b", "forall . a", "forall c. p(c", "p(x) & p(x, y)", "a & )",
    "forall bot. a",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_formula(text)


def test_parse_error_points_at_offset():
    with pytest.raises(ParseError) as info:
        parse_formula("a & & b")
    assert info.value.pos == 4


def test_variable_naming_convention():
    assert parse_term("x") == x
    assert parse_term("c") == c
    assert is_variable_name("z1") and not is_variable_name("k")
    # a bound name is a variable whatever its initial
    assert parse_formula("forall c. p(c)") == Forall("c", Atom("p", (Var("c"),)))


@pytest.mark.parametrize("f, expected", [
    (Forall("x", p(x)), set()),
    (Atom("p", (x, y)), {"x", "y"}),
    (Exists("x", Atom("p", (x, y))), {"y"}),
    (And(p(x), Forall("x", p(x))), {"x"}),
])
def test_free_vars(f, expected):
    assert free_vars(f) == expected


def test_substitute_basic():
    assert substitute(p(x), "x", Fn("f", (c,))) == p(Fn("f", (c,)))
    assert substitute(Forall("x", p(x)), "x", c) == Forall("x", p(x))


def test_substitute_avoids_capture():
    out = substitute(Forall("y", Atom("p", (x, y))), "x", Fn("f", (y,)))
    assert isinstance(out, Forall) and out.var != "y"
    assert out.body == Atom("p", (Fn("f", (y,)), Var(out.var)))
    assert alpha_eq(out, parse_formula("forall w. p(f(y), w)"))


@pytest.mark.parametrize("s, t, same", [
    ("forall x. p(x)", "forall y. p(y)", True),
    ("p(x)", "p(y)", False),
    ("a -> bot", "~a", True),
    ("forall x. exists y. r(x, y)", "forall y. exists x. r(y, x)", True),
    ("forall x. exists y. r(x, y)", "forall y. exists x. r(x, y)", False),
    ("forall x. p(x) & q", "forall y. p(x) & q", False),
])
def test_alpha_eq(s, t, same):
    assert alpha_eq(parse_formula(s), parse_formula(t)) is same


def test_fresh_name():
    assert fresh_name("x", {"x", "x1"}) not in {"x", "x1"}
    assert is_variable_name(fresh_name("x", set()))
    assert fresh_name("x1", {"x1"}) != "x1"


def test_nodes_are_frozen_and_hashable():
    f = parse_formula("a & b")
    with pytest.raises(AttributeError):
        f.left = b  # type: ignore[misc]
    assert len({f, parse_formula("a & b")}) == 1
    assert isinstance(parse_formula("bot"), Bottom)


@given(formulas)
def test_print_parse_round_trip(f):
    assert parse_formula(print_formula(f)) == f
    assert parse_formula(print_formula(f, unicode=True)) == f


@given(formulas)
def test_alpha_eq_reflexive_and_keyed(f):
    assert alpha_eq(f, f)
    assert alpha_key(f) == alpha_key(parse_formula(print_formula(f)))


@given(formulas, terms)
def test_substitution_free_vars(f, t):
    from glivenko.syntax import term_vars

    out = substitute(f, "x", t)
    expected = free_vars(f) - {"x"}
    if "x" in free_vars(f):
        expected |= term_vars(t)
    assert free_vars(out) == expected


@given(formulas)
def test_substitute_identity(f):
    assert alpha_eq(substitute(f, "x", x), f)


@given(formulas, st.sampled_from(["x", "y", "z"]))
def test_renaming_bound_variable_is_alpha_equivalent(f, v):
    fresh = fresh_name("w", free_vars(f) | {v})
    q_f = Forall(v, f)
    renamed = Forall(fresh, substitute(f, v, Var(fresh)))
    assert alpha_eq(q_f, renamed)
