import numpy as np
import pytest

from qdfs.spinops import (
    PRESET_STANDARD,
    PRESET_VERBATIM,
    base_operators,
    build_operators,
    extend_by_qubit,
)
from qdfs.states import product_state, singlet_state, triplet_states

MUS = (0.3, 0.5, 0.7, 0.9, 1.0, 1.6)


def classical_kron_sums(n):
    """Plain additive extension, the mu = 1 limit oracle."""
    s3 = np.diag([0.5, -0.5]).astype(complex)
    sp = np.array([[0, 1], [0, 0]], dtype=complex)
    out = {"k3": 0, "k+": 0, "k-": 0}
    for name, single in (("k3", s3), ("k+", sp), ("k-", sp.T.copy())):
        total = np.zeros((2**n, 2**n), dtype=complex)
        for i in range(n):
            mats = [np.eye(2, dtype=complex)] * n
            mats[i] = single
            term = mats[0]
            for m in mats[1:]:
                term = np.kron(term, m)
            total += term
        out[name] = total
    return out


def test_lowering_on_top_state_pinned():
    # at mu = 0.5 the deformation parameter is q = 2
    ops = build_operators(PRESET_STANDARD, 0.5, 2)
    top = product_state("++").amplitudes
    got = ops.k_minus @ top
    q = 2.0
    assert np.allclose(got, [0, q**-0.5, q**0.5, 0], atol=1e-14)


def test_singlet_annihilated_standard():
    for mu in MUS:
        ops = build_operators(PRESET_STANDARD, mu, 2)
        s = singlet_state(mu).amplitudes
        for mat in ops.generator_matrices().values():
            assert np.linalg.norm(mat @ s) < 1e-12


def test_triplets_not_annihilated():
    ops = build_operators(PRESET_STANDARD, 0.7, 2)
    for t in triplet_states(0.7):
        norms = [
            np.linalg.norm(mat @ t.amplitudes)
            for mat in ops.generator_matrices().values()
        ]
        assert max(norms) > 0.5


def test_mu_one_recovers_classical():
    for n in (1, 2, 3, 4):
        ops = build_operators(PRESET_STANDARD, 1.0, n)
        cls = classical_kron_sums(n)
        assert np.array_equal(ops.k3, cls["k3"])
        assert np.array_equal(ops.k_plus, cls["k+"])
        assert np.array_equal(ops.k_minus, cls["k-"])


def test_deformed_commutation_relations():
    # the construction never uses these relations directly, so they are an
    # independent check on the extension rule
    for mu in (0.3, 0.7, 1.5):
        q = 1.0 / mu
        for n in (1, 2, 3, 4):
            ops = build_operators(PRESET_STANDARD, mu, n)
            k3, kp, km = ops.k3, ops.k_plus, ops.k_minus
            assert np.linalg.norm(k3 @ kp - kp @ k3 - kp) < 1e-12
            assert np.linalg.norm(k3 @ km - km @ k3 + km) < 1e-12
            d3 = np.diag(k3).real
            if abs(q - 1.0) > 1e-12:
                rhs = np.diag((q ** (2 * d3) - q ** (-2 * d3)) / (q - 1.0 / q))
            else:
                rhs = np.diag(2 * d3)
            assert np.linalg.norm(kp @ km - km @ kp - rhs) < 1e-12


def test_k3_is_diagonal_and_classical():
    for mu in MUS:
        for n in (2, 3):
            ops = build_operators(PRESET_STANDARD, mu, n)
            cls = classical_kron_sums(n)
            assert np.array_equal(ops.k3, cls["k3"])


def test_adjoint_pairing_positive_mu():
    for mu in (0.3, 0.7, 1.0, 2.0):
        ops = build_operators(PRESET_STANDARD, mu, 3)
        assert np.allclose(ops.k_plus.conj().T, ops.k_minus, atol=1e-13)


def test_determinism():
    a = build_operators(PRESET_STANDARD, 0.7, 3)
    b = build_operators(PRESET_STANDARD, 0.7, 3)
    assert np.array_equal(a.k_plus, b.k_plus)
    assert np.array_equal(a.k3, b.k3)


def test_extend_by_qubit_dimensions():
    ops = base_operators(PRESET_STANDARD, 0.7)
    assert ops.n == 1 and ops.dim == 2
    ext = extend_by_qubit(ops)
    assert ext.n == 2 and ext.dim == 4
    assert ext.k3.shape == (4, 4)


def test_input_validation():
    with pytest.raises(ValueError):
        build_operators(PRESET_STANDARD, 0.0, 2)
    with pytest.raises(ValueError):
        build_operators("bogus", 0.7, 2)
    with pytest.raises(ValueError):
        build_operators(PRESET_STANDARD, 0.7, 0)
    with pytest.raises(ValueError):
        build_operators(PRESET_STANDARD, 0.7, 2.0)


class TestVerbatimPreset:
    def test_base_k3_pinned(self):
        mu = 0.7
        ops = base_operators(PRESET_VERBATIM, mu)
        expected = np.diag([1 / (2 * mu * mu), -mu * mu / 2]).astype(complex)
        assert np.allclose(ops.components["k3"], expected, atol=0)

    def test_base_k1_k2_pinned(self):
        ops = base_operators(PRESET_VERBATIM, 0.7)
        assert np.array_equal(ops.components["k1"], [[0, 0.5], [0.5, 0]])
        assert np.array_equal(ops.components["k2"], [[0, -0.5j], [0.5j, 0]])

    def test_k_plus_minus_formed_on_access(self):
        ops = base_operators(PRESET_VERBATIM, 0.7)
        assert np.allclose(
            ops.k_plus, ops.components["k1"] + 1j * ops.components["k2"]
        )
        assert np.allclose(
            ops.k_minus, ops.components["k1"] - 1j * ops.components["k2"]
        )

    def test_k3_annihilates_singlet_but_k12_do_not(self):
        mu = 0.7
        ops = build_operators(PRESET_VERBATIM, mu, 2)
        s = singlet_state(mu).amplitudes
        assert np.linalg.norm(ops.components["k3"] @ s) < 1e-12
        assert np.linalg.norm(ops.components["k1"] @ s) > 0.1
        assert np.linalg.norm(ops.components["k2"] @ s) > 0.1

    def test_base_override(self):
        override = {"k3": [[2.0, 0.0], [0.0, 3.0]]}
        ops = base_operators(PRESET_VERBATIM, 0.7, verbatim_base=override)
        assert np.array_equal(ops.components["k3"], [[2, 0], [0, 3]])
        # untouched components keep their defaults
        assert np.array_equal(ops.components["k1"], [[0, 0.5], [0.5, 0]])

    def test_base_override_validation(self):
        with pytest.raises(ValueError):
            base_operators(PRESET_VERBATIM, 0.7, verbatim_base={"k9": [[1]]})
        with pytest.raises(ValueError):
            base_operators(PRESET_VERBATIM, 0.7, verbatim_base={"k3": [[1, 2, 3]]})

    def test_override_ignored_by_standard_preset(self):
        ops = base_operators(PRESET_STANDARD, 0.7, verbatim_base={"k3": [[9, 0], [0, 9]]})
        assert np.array_equal(ops.k3, np.diag([0.5, -0.5]))
