import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blochquad import (
    BlochState,
    NotSelfAdjointError,
    PauliElement,
    decompose,
    is_positive_element,
    kron,
    recompose,
    state_eval,
    swap_conjugate,
)
from blochquad.pauli import (
    BASIS,
    ID2,
    SIGMA1,
    SIGMA2,
    SIGMA3,
    partial_trace_left,
    partial_trace_right,
)
from blochquad.positivity import jacobi_eigh


def test_decompose_basis_elements():
    p = decompose(SIGMA1)
    assert p.w0 == 0
    assert np.allclose(p.w, [1, 0, 0])
    p = decompose(ID2)
    assert p.w0 == 1
    assert np.allclose(p.w, [0, 0, 0])


def test_decompose_hand_expansion():
    # [[2,0],[0,0]] = 1 + sigma3
    p = decompose(np.array([[2, 0], [0, 0]], dtype=complex))
    assert abs(p.w0 - 1) < 1e-15
    assert np.abs(p.w - np.array([0, 0, 1])).max() < 1e-15


def test_recompose_examples():
    assert np.allclose(recompose(PauliElement(0, (1, 0, 0))), SIGMA1)
    assert np.allclose(recompose(PauliElement(1, (0, 0, 0))), ID2)
    expected = np.array([[1, -1j], [1j, 1]])
    assert np.abs(recompose(PauliElement(1, (0, 1, 0))) - expected).max() < 1e-15


def test_round_trip_random_matrices(rng):
    for _ in range(1000):
        m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        back = recompose(decompose(m))
        assert np.abs(back - m).max() < 1e-12


@settings(max_examples=100)
@given(
    st.lists(st.floats(-10, 10), min_size=8, max_size=8),
)
def test_round_trip_hypothesis(entries):
    m = np.array(entries[:4]).reshape(2, 2) + 1j * np.array(entries[4:]).reshape(2, 2)
    assert np.abs(recompose(decompose(m)) - m).max() < 1e-12


def test_is_positive_element_examples():
    assert is_positive_element(PauliElement(1, (1, 0, 0)))  # boundary
    assert not is_positive_element(PauliElement(1, (1, 1, 0)))
    assert is_positive_element(PauliElement(0.5, (0, 0, 0)))


def test_is_positive_element_rejects_non_self_adjoint():
    with pytest.raises(NotSelfAdjointError):
        is_positive_element(PauliElement(1j, (0, 0, 0)))
    with pytest.raises(NotSelfAdjointError):
        is_positive_element(PauliElement(1, (1e-6j, 0, 0)))


def test_positivity_agrees_with_eigensolver(rng):
    # |w| <= w0 must match the sign of the smallest eigenvalue of the matrix.
    for _ in range(1000):
        p = PauliElement(rng.normal(), rng.normal(size=3))
        eigs = jacobi_eigh(recompose(p))
        assert is_positive_element(p) == (eigs[0] >= -1e-9)


def test_state_eval_examples():
    assert state_eval(BlochState((0, 0, 1)), PauliElement(1, (0, 0, 1))) == 2
    mixed = BlochState((0, 0, 0))
    p = PauliElement(0.7, (0.1, 0.2, 0.3))
    assert state_eval(mixed, p) == p.w0
    assert state_eval(BlochState((1, 0, 0)), PauliElement(1, (0, 1, 0))) == 1


def test_state_eval_matches_density_matrix_trace(rng):
    for _ in range(200):
        f = rng.uniform(-1, 1, size=3)
        f /= max(1.0, np.linalg.norm(f) * 1.0001)
        s = BlochState(f)
        p = PauliElement(rng.normal() + 1j * rng.normal(), rng.normal(size=3) + 1j * rng.normal(size=3))
        via_trace = np.trace(s.density_matrix() @ recompose(p))
        assert abs(state_eval(s, p) - via_trace) < 1e-12


def test_bloch_state_validation():
    with pytest.raises(ValueError):
        BlochState((1, 1, 0))
    assert BlochState((0.6, 0.8, 0)).is_pure
    assert not BlochState((0.5, 0, 0)).is_pure


def test_kron_examples():
    assert np.allclose(kron(ID2, ID2), np.eye(4))
    assert np.allclose(kron(SIGMA3, SIGMA3), np.diag([1, -1, -1, 1]))
    expected = np.zeros((4, 4))
    expected[0, 2] = expected[1, 3] = expected[2, 0] = expected[3, 1] = 1
    assert np.allclose(kron(SIGMA1, ID2), expected)


def test_swap_conjugate_defining_property():
    assert np.allclose(swap_conjugate(kron(SIGMA1, SIGMA2)), kron(SIGMA2, SIGMA1))
    assert np.allclose(swap_conjugate(np.eye(4)), np.eye(4))


def test_swap_conjugate_involution_and_basis_pairs(rng):
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    h = g + g.conj().T
    assert np.abs(swap_conjugate(swap_conjugate(h)) - h).max() == 0
    for em in BASIS:
        for el in BASIS:
            assert np.abs(swap_conjugate(kron(em, el)) - kron(el, em)).max() == 0


def test_partial_traces_on_product_matrices(rng):
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    m = np.kron(a, b)
    assert np.abs(partial_trace_right(m) - a * np.trace(b) / 2).max() < 1e-14
    assert np.abs(partial_trace_left(m) - b * np.trace(a) / 2).max() < 1e-14
