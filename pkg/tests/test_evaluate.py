import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import corpus, formulas
from veclogic.core import FALSE, TRUE
from veclogic.evaluate import (MissingVariableError, VariableCapError, equivalent, eval_binary,
                               eval_scalar, eval_vector, grid_values, is_contradiction,
                               is_tautology, probabilistic_grid, truth_table)
from veclogic.formula import (BOTTOM, TOP, And, Const, Equiv, Impl, Nand, Nor, Not, Or, Var, Xor,
                              parse, variables)

weights = st.floats(0.0, 1.0, allow_nan=False)

# independent scalar semantics: product-rule probabilities, no matrices
_SCALAR = {
    And: lambda a, b: a * b,
    Or: lambda a, b: a + b - a * b,
    Impl: lambda a, b: 1 - a + a * b,
    Nand: lambda a, b: 1 - a * b,
    Nor: lambda a, b: (1 - a) * (1 - b),
    Xor: lambda a, b: a * (1 - b) + b * (1 - a),
    Equiv: lambda a, b: a * b + (1 - a) * (1 - b),
}


def scalar_oracle(f, env):
    if isinstance(f, Var):
        return env[f.name]
    if isinstance(f, Const):
        return 1.0 if f.value else 0.0
    if isinstance(f, Not):
        return 1.0 - scalar_oracle(f.child, env)
    return _SCALAR[type(f)](scalar_oracle(f.left, env), scalar_oracle(f.right, env))


def test_binary_examples():
    assert eval_binary(parse("p -> q"), {"p": 1, "q": 0}) is False
    assert eval_binary(parse("p ^ q"), {"p": 1, "q": 1}) is False
    for v in (0, 1):
        assert eval_binary(parse("p | !p"), {"p": v}) is True


def test_binary_rejects_fractional_weight():
    with pytest.raises(ValueError):
        eval_binary(parse("p"), {"p": 0.5})


def test_vector_examples():
    assert eval_vector(parse("!p"), {"p": 1}) == FALSE
    assert eval_vector(parse("p ^ q"), {"p": 0.5, "q": 0.5}).alpha == pytest.approx(0.5, abs=1e-12)
    assert eval_vector(parse("p | q"), {"p": 0.3, "q": 0.4}).alpha == pytest.approx(0.58, abs=1e-12)
    assert eval_vector(TOP, {}) == TRUE


def test_scalar_examples():
    assert eval_scalar(parse("p -> q"), {"p": 1, "q": 0}) == 0
    grid = [0.1 * i for i in range(11)]
    f = parse("p -> q")
    for a, b in itertools.product(grid, grid):
        assert abs(eval_scalar(f, {"p": a, "q": b}) - (1 - a * (1 - b))) <= 1e-12
    assert eval_scalar(TOP, {}) == 1


def test_missing_variable_is_named():
    with pytest.raises(MissingVariableError) as info:
        eval_scalar(parse("p & q"), {"p": 1})
    assert info.value.name == "q"
    assert "'q'" in str(info.value)


@pytest.mark.parametrize("w", [-0.01, 1.5])
def test_out_of_range_weight(w):
    with pytest.raises(ValueError):
        eval_vector(parse("p"), {"p": w})


def test_extra_variables_are_ignored():
    assert eval_scalar(parse("p"), {"p": 0.2, "zz": 0.9}) == pytest.approx(0.2)


def test_truth_table_layout():
    t = truth_table(parse("p & q"))
    assert t.variables == ("p", "q")
    assert list(t.rows()) == [((True, True), True), ((True, False), False),
                              ((False, True), False), ((False, False), False)]
    assert all(truth_table(parse("p | !p")).bits)
    assert not any(truth_table(parse("p ^ p")).bits)
    assert len(truth_table(parse("p & q & r & w"))) == 16


def test_truth_table_cap():
    f = parse(" & ".join(f"x{i}" for i in range(21)))
    with pytest.raises(VariableCapError):
        truth_table(f)
    assert len(truth_table(parse("p & q & r"), max_vars=3)) == 8
    with pytest.raises(VariableCapError):
        truth_table(parse("p & q & r"), max_vars=2)


def test_equivalence_examples():
    assert equivalent(parse("p -> q"), parse("!p | q"))
    assert equivalent(parse("p & q"), parse("!(!p | !q)"))
    assert not equivalent(parse("p"), parse("q"))
    # variables absent from one side are vacuous
    assert equivalent(parse("p"), parse("p & (q | !q)"))


def test_tautology_examples():
    assert is_tautology(parse("(p & (p -> q)) -> q"))
    assert is_tautology(parse("((p -> r) & (r -> q)) -> (p -> q)"))
    assert not is_tautology(parse("p -> q"))
    assert is_contradiction(parse("p & !p"))
    assert is_tautology(TOP) and is_contradiction(BOTTOM)


def test_grid_values():
    assert grid_values(0.25) == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert grid_values(0.3) == [0.0, 0.3, 0.6, 0.9, 1.0]
    assert len(grid_values(0.05)) == 21
    with pytest.raises(ValueError):
        grid_values(0)


@settings(max_examples=200)
@given(formulas(names=("p", "q", "r", "w", "z", "y")))
def test_vector_route_agrees_with_binary_route(f):
    names = variables(f)
    for row in itertools.product((0, 1), repeat=len(names)):
        a = dict(zip(names, row))
        w = eval_vector(f, a).alpha
        assert w in (0.0, 1.0)
        assert (w == 1.0) == eval_binary(f, a)


@settings(max_examples=200)
@given(formulas(), weights, weights, weights)
def test_pi_closure_and_independent_scalar_semantics(f, a, b, c):
    env = {"p": a, "q": b, "r": c}
    v = eval_vector(f, env)
    x, y = v.coefficients
    assert 0.0 <= v.alpha <= 1.0 and abs(x + y - 1) <= 1e-12
    assert abs(v.alpha - scalar_oracle(f, env)) <= 1e-9


@given(weights)
def test_constants_are_fixed(a):
    assert eval_scalar(BOTTOM, {"p": a}) == 0.0
    assert eval_scalar(TOP, {"p": a}) == 1.0


def test_corpus_agreement_six_variables():
    for f in corpus(100, seed=11, max_names=6):
        names = variables(f)
        for a in probabilistic_grid(names, 1.0):
            assert (eval_vector(f, a).alpha == 1.0) == eval_binary(f, a)
