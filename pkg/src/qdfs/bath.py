"""Truncated harmonic bath: mode operators and the free bath Hamiltonian."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class BathSpec:
    """Oscillator bath description.

    frequencies lists one omega per mode (energy units, hbar = 1);
    fock_cutoff is the shared truncation level, so each mode keeps the
    levels 0 .. fock_cutoff - 1 and the bath dimension is
    fock_cutoff ** n_modes.
    """

    frequencies: tuple
    fock_cutoff: int

    def __post_init__(self):
        freqs = tuple(float(w) for w in self.frequencies)
        if not freqs:
            raise ValueError("at least one bath mode is required")
        object.__setattr__(self, "frequencies", freqs)
        if not isinstance(self.fock_cutoff, int) or self.fock_cutoff < 2:
            raise ValueError("fock_cutoff must be an integer >= 2")

    @property
    def n_modes(self):
        return len(self.frequencies)

    @property
    def dim(self):
        return self.fock_cutoff**self.n_modes


def _single_mode_lowering(cutoff):
    # b|n> = sqrt(n)|n-1>, zero at the truncation boundary
    return np.diag(np.sqrt(np.arange(1, cutoff, dtype=float)), k=1).astype(complex)


def bath_operators(spec):
    """Full-bath-space matrices for every mode.

    Returns a dict with lists "b" and "bdag" (one entry per mode, each a
    dim x dim matrix embedded with identities on the other modes) and the
    diagonal free Hamiltonian "h_b" = sum_k omega_k b_k^dag b_k.
    """
    cutoff = spec.fock_cutoff
    low = _single_mode_lowering(cutoff)
    eye = np.eye(cutoff, dtype=complex)
    bs = []
    for k in range(spec.n_modes):
        mat = np.eye(1, dtype=complex)
        for j in range(spec.n_modes):
            mat = np.kron(mat, low if j == k else eye)
        bs.append(mat)
    bdags = [b.conj().T for b in bs]
    h_b = np.zeros((spec.dim, spec.dim), dtype=complex)
    for w, b, bd in zip(spec.frequencies, bs, bdags):
        h_b += w * (bd @ b)
    return {"b": bs, "bdag": bdags, "h_b": h_b}
