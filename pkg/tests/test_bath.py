import numpy as np
import pytest

from qdfs.bath import BathSpec, bath_operators


def test_spec_validation():
    with pytest.raises(ValueError):
        BathSpec((), 4)
    with pytest.raises(ValueError):
        BathSpec((1.0,), 1)
    with pytest.raises(ValueError):
        BathSpec((1.0,), 0)
    spec = BathSpec((1.0, 2.0), 3)
    assert spec.n_modes == 2
    assert spec.dim == 9


def test_single_mode_lowering_matrix():
    spec = BathSpec((1.0,), 4)
    b = bath_operators(spec)["b"][0]
    expected = np.diag(np.sqrt([1.0, 2.0, 3.0]), k=1)
    assert np.allclose(b, expected, atol=0)


def test_commutator_truncation_artifact():
    # [b, b+] = 1 everywhere except the top Fock level, where the cutoff
    # forces the diagonal entry -(N-1)
    cutoff = 5
    spec = BathSpec((1.0,), cutoff)
    ops = bath_operators(spec)
    b, bd = ops["b"][0], ops["bdag"][0]
    comm = b @ bd - bd @ b
    expected = np.eye(cutoff)
    expected[-1, -1] = -(cutoff - 1)
    assert np.allclose(comm, expected, atol=1e-14)


def test_number_operator_spectrum():
    spec = BathSpec((2.5,), 6)
    h_b = bath_operators(spec)["h_b"]
    assert np.allclose(h_b, np.diag(2.5 * np.arange(6)), atol=1e-14)


def test_two_mode_embedding():
    spec = BathSpec((1.0, 3.0), 3)
    ops = bath_operators(spec)
    b0, b1 = ops["b"]
    # embedded on different factors, so they commute
    assert np.allclose(b0 @ b1, b1 @ b0, atol=1e-14)
    # h_b = w0 n0 (x) 1 + 1 (x) w1 n1, diagonal
    n_single = np.diag(np.arange(3.0))
    eye = np.eye(3)
    expected = 1.0 * np.kron(n_single, eye) + 3.0 * np.kron(eye, n_single)
    assert np.allclose(ops["h_b"], expected, atol=1e-14)


def test_adjoint_consistency():
    spec = BathSpec((1.0, 2.0), 4)
    ops = bath_operators(spec)
    for b, bd in zip(ops["b"], ops["bdag"]):
        assert np.allclose(bd, b.conj().T, atol=0)
