"""Register states on n qubits.

Basis ordering is lexicographic with |+> before |-> on every factor, so
for two qubits the basis reads |++>, |+->, |-+>, |-->.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class QState:
    """Dense complex state vector on an n-qubit register."""

    amplitudes: np.ndarray
    n: int

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (2**self.n,):
            raise ValueError(
                f"amplitude vector has shape {amps.shape}, expected ({2**self.n},)"
            )
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self):
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, tol=NORM_TOL):
        return abs(self.norm - 1.0) <= tol

    def overlap(self, other):
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def product_state(pattern):
    """Computational basis state from a string of '+' and '-' characters."""
    if not pattern or any(ch not in "+-" for ch in pattern):
        raise ValueError(f"pattern must be nonempty over '+'/'-', got {pattern!r}")
    index = 0
    for ch in pattern:
        index = 2 * index + (0 if ch == "+" else 1)
    amps = np.zeros(2 ** len(pattern), dtype=complex)
    amps[index] = 1.0
    return QState(amps, len(pattern))


def singlet_state(mu):
    """The deformed two-qubit singlet (|+-> - mu|-+>)/sqrt(1 + mu^2)."""
    amps = np.zeros(4, dtype=complex)
    scale = 1.0 / math.sqrt(1.0 + mu * mu)
    amps[1] = scale
    amps[2] = -mu * scale
    return QState(amps, 2)


def triplet_states(mu):
    """The three deformed triplet states.

    Returns (|++>, (mu|+-> + |-+>)/sqrt(1+mu^2), |-->).  The middle state
    is written in the source form (mu/sqrt(1+mu^2))(|+-> + (1/mu)|-+>),
    which divides by mu, so mu = 0 is rejected.
    """
    if mu == 0:
        raise ValueError("middle triplet state is undefined at mu = 0")
    scale = mu / math.sqrt(1.0 + mu * mu)
    mid = np.zeros(4, dtype=complex)
    mid[1] = scale
    mid[2] = scale / mu
    return (
        product_state("++"),
        QState(mid, 2),
        product_state("--"),
    )
