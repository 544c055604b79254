import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from veclogic.core import (BASIS, EXACT_TOL, FALSE, TRUE, ArityError, Basis, LogicMatrix,
                           TruthVector, apply, kron, scalar_project, vec_eq)
from veclogic.operators import DYADIC, MONADIC, build_gate

weights = st.floats(0.0, 1.0, allow_nan=False)
GRID = [round(0.1 * i, 10) for i in range(11)]


def test_canonical_basis_is_orthonormal():
    s, n = BASIS.s, BASIS.n
    assert s.tolist() == [1.0, 0.0] and n.tolist() == [0.0, 1.0]
    assert abs(s @ s - 1) <= 1e-12 and abs(n @ n - 1) <= 1e-12 and abs(s @ n) <= 1e-12


def test_non_orthonormal_basis_rejected():
    with pytest.raises(ValueError):
        Basis(2, np.array([1.0, 0.0]), np.array([1.0, 1.0]))


@pytest.mark.parametrize("alpha", [-0.1, 1.0000001, float("nan")])
def test_truth_vector_out_of_range_is_an_error(alpha):
    with pytest.raises(ValueError):
        TruthVector(alpha)


@given(weights)
def test_truth_vector_is_in_pi(alpha):
    u = TruthVector(alpha)
    a, b = u.coefficients
    assert a >= 0 and b >= 0 and abs(a + b - 1) <= 1e-12
    np.testing.assert_allclose(u.vector, alpha * BASIS.s + (1 - alpha) * BASIS.n)


def test_kron_basis_placement():
    assert kron(BASIS.s, BASIS.n).tolist() == [0.0, 1.0, 0.0, 0.0]


def test_kron_inner_product_factorises():
    s, n = BASIS.s, BASIS.n
    assert kron(s, n) @ kron(s, n) == 1.0
    assert kron(s, n) @ kron(n, s) == 0.0


def test_kron_of_negations_maps_ss_to_nn():
    N = build_gate("N").entries
    np.testing.assert_array_equal(kron(N, N) @ kron(BASIS.s, BASIS.s), kron(BASIS.n, BASIS.n))


def test_kron_mixed_product_property():
    rng = np.random.default_rng(7)
    for _ in range(50):
        A, Ap = rng.normal(size=(2, 3)), rng.normal(size=(3, 2))
        B, Bp = rng.normal(size=(3, 2)), rng.normal(size=(2, 4))
        np.testing.assert_allclose(kron(A, B) @ kron(Ap, Bp), kron(A @ Ap, B @ Bp), atol=1e-12)


def test_kron_transpose_property():
    rng = np.random.default_rng(8)
    A, B = rng.normal(size=(2, 3)), rng.normal(size=(4, 2))
    np.testing.assert_array_equal(kron(A, B).T, kron(A.T, B.T))


def test_apply_examples():
    N, C, I, X = (build_gate(g) for g in "NCIX")
    assert apply(N, TRUE) == FALSE
    assert apply(C, TruthVector(0.5), TruthVector(0.5)).alpha == 0.25
    u = TruthVector(0.37)
    assert apply(I, u) == u
    half = TruthVector(0.5)
    assert vec_eq(half, apply(X, half, TRUE), 1e-12)


def test_apply_arity_mismatch():
    with pytest.raises(ArityError):
        apply(build_gate("C"), TRUE)
    with pytest.raises(ArityError):
        apply(build_gate("N"), TRUE, TRUE)


@pytest.mark.parametrize("gate", DYADIC)
def test_apply_matches_materialised_product_and_stays_in_pi(gate):
    # closure on the 0.1 grid; the reference is the full numpy matrix product
    m = build_gate(gate)
    for a, b in itertools.product(GRID, GRID):
        u, v = TruthVector(a), TruthVector(b)
        ref = m.entries @ np.kron(u.vector, v.vector)
        out = apply(m, u, v)
        assert abs(ref.sum() - 1) <= EXACT_TOL and ref.min() >= -EXACT_TOL
        assert abs(out.alpha - ref[0]) <= EXACT_TOL
        assert 0.0 <= out.alpha <= 1.0


@pytest.mark.parametrize("gate", MONADIC)
def test_monadic_closure(gate):
    m = build_gate(gate)
    for a in GRID:
        ref = m.entries @ TruthVector(a).vector
        assert abs(apply(m, TruthVector(a)).alpha - ref[0]) <= EXACT_TOL


def test_scalar_project():
    assert scalar_project(TRUE) == 1.0
    assert scalar_project(FALSE) == 0.0
    assert scalar_project(TruthVector(0.3)) == pytest.approx(0.3, abs=1e-15)


def test_vec_eq():
    assert vec_eq(TRUE, TRUE, 1e-12)
    assert not vec_eq(TRUE, FALSE, 1e-12)
    with pytest.raises(ValueError):
        vec_eq(TRUE, TRUE, 0)


def test_from_vector_roundtrip_and_rejects_outside_pi():
    assert TruthVector.from_vector([0.25, 0.75]).alpha == 0.25
    with pytest.raises(ValueError):
        TruthVector.from_vector([0.5, 0.6])


def test_logic_matrix_shape_validated():
    with pytest.raises(ValueError):
        LogicMatrix("bad", np.zeros((2, 3)))
    assert build_gate("C").arity == 2 and build_gate("N").arity == 1
