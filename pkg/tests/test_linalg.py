import math

import numpy as np
import pytest

from speclab import ContractError, commutator, operator_norm, tridiag_eigh
from speclab.linalg import _exact_norm


def test_tridiag_pauli_half():
    dec = tridiag_eigh([0.0, 0.0], [0.5])
    assert np.allclose(dec.eigenvalues, [-0.5, 0.5], atol=1e-14)


def test_tridiag_spin_one_by_hand():
    # characteristic polynomial of [[0,c,0],[c,0,c],[0,c,0]] with c = 1/sqrt(2)
    # is -t^3 + 2 c^2 t = -t (t^2 - 1), so the spectrum is {-1, 0, 1}
    c = 1 / math.sqrt(2)
    dec = tridiag_eigh([0.0, 0.0, 0.0], [c, c])
    assert np.allclose(dec.eigenvalues, [-1.0, 0.0, 1.0], atol=1e-14)


def test_tridiag_singleton():
    dec = tridiag_eigh([5.0], [])
    assert dec.eigenvalues[0] == 5.0
    assert dec.eigenvectors[0, 0] == 1.0


@pytest.mark.parametrize("n", [2, 3, 7, 20, 63])
def test_tridiag_decomposition_invariants(n):
    rng = np.random.default_rng(100 + n)
    d = rng.standard_normal(n)
    e = rng.standard_normal(n - 1)
    w, v = tridiag_eigh(d, e)
    a = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    norm_a = operator_norm(a)
    assert np.all(np.diff(w) >= 0)
    for i in range(n):
        resid = np.linalg.norm(a @ v[:, i] - w[i] * v[:, i])
        assert resid <= 1e-10 * (1 + abs(w[i])) * norm_a
    assert np.max(np.abs(v.T @ v - np.eye(n))) <= 1e-10
    assert np.max(np.abs(v @ np.diag(w) @ v.T - a)) <= 1e-10 * norm_a


def test_tridiag_contract_errors():
    with pytest.raises(ContractError):
        tridiag_eigh([1.0, 2.0], [1.0, 2.0])
    with pytest.raises(ContractError):
        tridiag_eigh([1.0, np.nan], [1.0])


def test_operator_norm_identity():
    assert operator_norm(np.eye(3)) == 1.0


def test_operator_norm_nilpotent_shift():
    assert abs(operator_norm(np.array([[0.0, 1.0], [0.0, 0.0]])) - 1.0) <= 1e-12


def test_operator_norm_diagonal_fast_path():
    a = np.diag([1 / math.pi, -1 / (3 * math.pi)])
    assert operator_norm(a) == 1 / math.pi


def test_operator_norm_symmetries():
    rng = np.random.default_rng(1)
    for n in (2, 5, 11, 40):
        a = rng.standard_normal((n, n))
        base = operator_norm(a)
        assert abs(operator_norm(a.T) - base) <= 1e-12 * base
        assert abs(operator_norm(-a) - base) <= 1e-12 * base
        q1, _ = np.linalg.qr(rng.standard_normal((n, n)))
        q2, _ = np.linalg.qr(rng.standard_normal((n, n)))
        assert abs(operator_norm(q1 @ a @ q2) - base) <= 1e-10 * base


@pytest.mark.parametrize("n,complex_", [(3, False), (8, False), (17, True), (60, True)])
def test_operator_norm_matches_lapack(n, complex_):
    rng = np.random.default_rng(n)
    a = rng.standard_normal((n, n))
    if complex_:
        a = a + 1j * rng.standard_normal((n, n))
    ref = np.linalg.norm(a, 2)
    assert abs(operator_norm(a) - ref) <= 1e-12 * ref


def test_operator_norm_rectangular():
    rng = np.random.default_rng(5)
    a = rng.standard_normal((7, 3))
    ref = np.linalg.norm(a, 2)
    assert abs(operator_norm(a) - ref) <= 1e-12 * ref


def test_operator_norm_deterministic():
    rng = np.random.default_rng(9)
    a = rng.standard_normal((30, 30))
    assert operator_norm(a) == operator_norm(a.copy())


def test_operator_norm_seed_override(monkeypatch):
    rng = np.random.default_rng(21)
    a = rng.standard_normal((25, 25))
    ref = np.linalg.norm(a, 2)
    monkeypatch.setenv("LAB_SEED", "12345")
    assert abs(operator_norm(a) - ref) <= 1e-12 * ref
    monkeypatch.delenv("LAB_SEED")
    assert abs(operator_norm(a) - ref) <= 1e-12 * ref


def test_operator_norm_zero_and_contracts():
    assert operator_norm(np.zeros((4, 4))) == 0.0
    with pytest.raises(ContractError):
        operator_norm(np.array([[np.inf, 0.0], [0.0, 1.0]]))
    with pytest.raises(ContractError):
        operator_norm(np.zeros((0, 3)))


def test_exact_norm_hermitian_branch():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((12, 12))
    a = a + a.T
    assert abs(_exact_norm(a) - np.linalg.norm(a, 2)) <= 1e-12


def test_commutator_self_is_zero():
    rng = np.random.default_rng(2)
    a = rng.standard_normal((4, 4))
    assert np.max(np.abs(commutator(a, a))) == 0.0


def test_commutator_projection_pair_by_hand():
    # (I + sigma_x)/2 against (I + sigma_z)/2
    p = np.array([[0.5, 0.5], [0.5, 0.5]])
    q = np.array([[1.0, 0.0], [0.0, 0.0]])
    c = commutator(p, q)
    assert np.allclose(c, [[0.0, -0.5], [0.5, 0.0]], atol=1e-15)
    assert abs(operator_norm(c) - 0.5) <= 1e-12


def test_commutator_diagonals_commute():
    a = np.diag([1.0, 2.0, 3.0])
    b = np.diag([-1.0, 5.0, 0.5])
    assert np.max(np.abs(commutator(a, b))) == 0.0


def test_commutator_size_mismatch():
    with pytest.raises(ContractError):
        commutator(np.eye(2), np.eye(3))
    with pytest.raises(ContractError):
        commutator(np.ones((2, 3)), np.ones((2, 3)))


def test_projection_commutator_bound():
    # ||[P, Q]|| <= 1/2 for any pair of orthogonal projections
    rng = np.random.default_rng(17)
    for n in (2, 5, 9, 16):
        for _ in range(5):
            q1, _ = np.linalg.qr(rng.standard_normal((n, n)))
            q2, _ = np.linalg.qr(rng.standard_normal((n, n)))
            k1 = int(rng.integers(1, n))
            k2 = int(rng.integers(1, n))
            p = q1[:, :k1] @ q1[:, :k1].T
            q = q2[:, :k2] @ q2[:, :k2].T
            assert operator_norm(commutator(p, q)) <= 0.5 + 1e-12
