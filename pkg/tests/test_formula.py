import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import formulas
from veclogic.formula import (BOTTOM, TOP, And, Const, Equiv, FormulaError, FormulaSyntaxError,
                              Impl, LexicalError, Nand, Nor, Not, Or, UnbalancedParenthesesError,
                              Var, Xor, depth, fold, parse, random_formula, render, size,
                              substitute, substitute_many, tokenize, variables)
from veclogic.evaluate import eval_scalar, probabilistic_grid

p, q, r = Var("p"), Var("q"), Var("r")


@pytest.mark.parametrize("text, expected", [
    ("p -> q", Impl(p, q)),
    ("p | q & r", Or(p, And(q, r))),
    ("p -> q -> r", Impl(p, Impl(q, r))),
    ("p & q & r", And(And(p, q), r)),
    ("p ^ q ^ r", Xor(Xor(p, q), r)),
    ("p <-> q <-> r", Equiv(Equiv(p, q), r)),
    ("!p & q", And(Not(p), q)),
    ("!!p", Not(Not(p))),
    ("p !& q", Nand(p, q)),
    ("p !| q | r", Or(Nor(p, q), r)),
    ("p & q !& r", Nand(And(p, q), r)),
    ("p ^ q -> r", Impl(Xor(p, q), r)),
    ("p -> q <-> r", Equiv(Impl(p, q), r)),
    ("p | q ^ r", Xor(Or(p, q), r)),
    ("(p -> q) -> r", Impl(Impl(p, q), r)),
    ("true & 0", And(TOP, BOTTOM)),
    ("1 | false", Or(TOP, BOTTOM)),
    ("x_1 & y2", And(Var("x_1"), Var("y2"))),
    ("p\n  & q", And(p, q)),
])
def test_parse(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize("text, kind, line, column", [
    ("p -> ", "syntax", 1, 6),
    ("(p", "unbalanced", 1, 3),
    ("p)", "unbalanced", 1, 2),
    ("(q | )", "syntax", 1, 6),
    ("p $ q", "lexical", 1, 3),
    ("P & q", "lexical", 1, 1),
    ("p q", "syntax", 1, 3),
    ("", "syntax", 1, 1),
    ("p &\n& q", "syntax", 2, 1),
])
def test_parse_errors_carry_kind_and_position(text, kind, line, column):
    with pytest.raises(FormulaError) as info:
        parse(text)
    assert info.value.kind == kind
    assert (info.value.line, info.value.column) == (line, column)


def test_error_hierarchy():
    assert issubclass(UnbalancedParenthesesError, FormulaSyntaxError)
    assert issubclass(LexicalError, ValueError)


def test_tokenize_longest_match():
    kinds = [t.text for t in tokenize("p<->q->r!&s!|w")]
    assert kinds == ["p", "<->", "q", "->", "r", "!&", "s", "!|", "w", ""]


@pytest.mark.parametrize("bad", ["true", "false", "P", "1x", ""])
def test_var_name_validation(bad):
    with pytest.raises(ValueError):
        Var(bad)


def test_render_examples():
    assert render(Impl(p, q)) == "p -> q"
    assert render(Impl(p, q), "polish") == "L p q"
    assert render(parse("!(p & q)")) == "!(p & q)"
    assert render(parse("(p -> q) -> r")) == "(p -> q) -> r"
    assert render(parse("p -> (q -> r)")) == "p -> q -> r"
    assert render(parse("p & (q & r)")) == "p & (q & r)"
    assert render(parse("!p <-> (q ^ 1)"), "polish") == "E N p X q 1"
    assert render(parse("p !& q !| r"), "polish") == "P S p q r"


def test_render_rejects_unknown_notation():
    with pytest.raises(ValueError):
        render(p, "rpn")


@settings(max_examples=300)
@given(formulas(max_leaves=40).filter(lambda f: depth(f) <= 8))
def test_infix_round_trip(f):
    assert parse(render(f)) == f


def test_infix_round_trip_deep_random():
    rng = random.Random(3)
    for _ in range(300):
        f = random_formula(rng, ("p", "q", "r", "w"), max_depth=8, const_prob=0.1)
        assert depth(f) <= 9
        assert parse(render(f)) == f


def test_polish_has_one_symbol_per_node():
    rng = random.Random(4)
    for _ in range(100):
        f = random_formula(rng, ("p", "q"), max_depth=5)
        assert len(render(f, "polish").split()) == size(f)


def test_substitute_examples():
    assert substitute(p & q, "p", TOP) == And(TOP, q)
    t = Var("t")
    assert substitute(parse("p | !p"), "p", t & p) == parse("(t & p) | !(t & p)")
    assert substitute(q, "p", r) == q


@given(formulas(), st.sampled_from("pqr"))
def test_substitute_self_is_identity(f, x):
    assert substitute(f, x, Var(x)) == f


@given(formulas(), st.sampled_from("pqr"), formulas(names=("r", "w")))
def test_substitute_variable_bound(f, x, g):
    out = set(variables(substitute(f, x, g)))
    assert out <= (set(variables(f)) - {x}) | set(variables(g))


def test_substitute_many_is_simultaneous():
    assert substitute_many(p >> q, {"p": q, "q": p}) == Impl(q, p)


def test_variables_examples():
    assert variables(parse("(p | q) -> (!q & p)")) == ("p", "q")
    assert variables(TOP) == ()
    assert variables(parse("((p -> q) & (q -> r)) -> (p -> r)")) == ("p", "q", "r")


def test_structural_equality_and_hash():
    assert parse("p & q") == And(Var("p"), Var("q"))
    assert hash(parse("p & q")) == hash(And(p, q))
    assert parse("p & q") != parse("q & p")
    assert Const(True) == TOP


def test_operator_overloads():
    assert (p & q) == And(p, q)
    assert (p | q) == Or(p, q)
    assert (p ^ q) == Xor(p, q)
    assert ~p == Not(p)
    assert (p >> q) == Impl(p, q)
    assert str(p >> q) == "p -> q"


def test_fold_examples():
    assert fold(parse("1 & q")) == q
    assert fold(parse("!!p")) == p
    assert fold(parse("(1 -> q) ^ (0 -> q)")) == Not(q)
    assert fold(parse("p ^ p")) == parse("p ^ p")


@settings(max_examples=150)
@given(formulas(names=("p", "q")))
def test_fold_preserves_probabilistic_value(f):
    g = fold(f)
    for pt in probabilistic_grid(("p", "q"), 0.25):
        assert abs(eval_scalar(f, pt) - eval_scalar(g, pt)) <= 1e-12


def test_unclosed_paren_message_names_the_opener():
    with pytest.raises(UnbalancedParenthesesError, match="opened at line 1, column 1"):
        parse("(p")
