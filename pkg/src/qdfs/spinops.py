"""n-qubit q-spin operators built one qubit at a time.

A coproduct-extension rule says how each generator on n qubits becomes a
generator on n+1 qubits when a fresh qubit is appended on the right:

    K_new = K_old (x) right  +  left^{(x)n} (x) contrib

with three 2x2 matrices per generator: the contribution acting on the new
qubit, a per-existing-qubit diagonal left twist, and a diagonal right
twist multiplying the carried operator.  Extension order is strictly
left to right; that is the only order the recurrences define.

Two presets ship:

  "uq-su2"          K3 extends classically and K+- pick up q^{K3} twists
                    with q = 1/mu, the unique choice that leaves the
                    deformed singlet invariant.

  "paper-verbatim"  the literal recurrence rules from the source
                    derivation this package audits, preserved including
                    their known inconsistency in the transverse components
                    (K1/K2 carry diagonal single-qubit contributions, so
                    mu = 1 does not recover the classical coproduct for
                    them).  Residuals are reported, never patched.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

PRESET_STANDARD = "uq-su2"
PRESET_VERBATIM = "paper-verbatim"
PRESETS = (PRESET_STANDARD, PRESET_VERBATIM)

GENERATOR_KEYS = ("k3", "k+", "k-")


@dataclass(frozen=True)
class ExtensionTerm:
    """Per-generator extension data (all 2x2, complex)."""

    contrib: np.ndarray
    left: np.ndarray
    right: np.ndarray


@dataclass(frozen=True)
class CoproductRule:
    """Named bundle of extension terms, keyed by native generator label."""

    name: str
    terms: MappingProxyType


@dataclass(frozen=True, eq=False)
class SpinOperatorSet:
    """The total-register generators on n qubits plus the rule that built them.

    components holds the natively extended matrices.  For the standard
    preset these are k3, k+, k- themselves; the verbatim preset extends
    k3, k1, k2 and forms k+- = k1 +- i k2 on access.
    """

    n: int
    mu: float
    preset: str
    rule: CoproductRule
    components: MappingProxyType

    @property
    def dim(self):
        return 2**self.n

    @property
    def k3(self):
        return self.components["k3"]

    @property
    def k_plus(self):
        if "k+" in self.components:
            return self.components["k+"]
        return self.components["k1"] + 1j * self.components["k2"]

    @property
    def k_minus(self):
        if "k-" in self.components:
            return self.components["k-"]
        return self.components["k1"] - 1j * self.components["k2"]

    def generator_matrices(self):
        """The operator triple as a dict keyed by 'k3', 'k+', 'k-'."""
        return {"k3": self.k3, "k+": self.k_plus, "k-": self.k_minus}


def _c(mat):
    return np.array(mat, dtype=complex)


def _freeze(d):
    return MappingProxyType(dict(d))


def base_operators(preset, mu, verbatim_base=None):
    """Single-qubit generators and the extension rule for the chosen preset.

    verbatim_base optionally overrides any of the k3/k1/k2 base matrices
    of the verbatim preset (2x2 arrays); it is ignored by the standard
    preset.
    """
    if mu == 0:
        raise ValueError("mu must be nonzero")
    if preset not in PRESETS:
        raise ValueError(f"unknown preset {preset!r}; expected one of {PRESETS}")

    eye = np.eye(2, dtype=complex)
    half3 = _c([[0.5, 0], [0, -0.5]])

    if preset == PRESET_STANDARD:
        q = 1.0 / mu
        # principal branch; complex only when mu < 0
        rq = complex(q) ** 0.5
        twist_new = _c([[rq, 0], [0, 1 / rq]])   # q^{k3} on the appended qubit
        twist_old = _c([[1 / rq, 0], [0, rq]])   # q^{-k3} per existing qubit
        components = {
            "k3": half3,
            "k+": _c([[0, 1], [0, 0]]),
            "k-": _c([[0, 0], [1, 0]]),
        }
        terms = {
            "k3": ExtensionTerm(half3, eye, eye),
            "k+": ExtensionTerm(components["k+"], twist_old, twist_new),
            "k-": ExtensionTerm(components["k-"], twist_old, twist_new),
        }
    else:
        m2 = mu * mu
        components = {
            "k3": _c([[1 / (2 * m2), 0], [0, -m2 / 2]]),
            "k1": _c([[0, 0.5], [0.5, 0]]),
            "k2": _c([[0, -0.5j], [0.5j, 0]]),
        }
        if verbatim_base:
            unknown = set(verbatim_base) - set(components)
            if unknown:
                raise ValueError(f"unknown verbatim base keys {sorted(unknown)}")
            for key, mat in verbatim_base.items():
                mat = _c(mat)
                if mat.shape != (2, 2):
                    raise ValueError(f"verbatim base {key} must be 2x2")
                components[key] = mat
        twist_j = _c([[1 / mu, 0], [0, mu]])
        twist_3 = _c([[1 / m2, 0], [0, m2]])
        terms = {
            "k3": ExtensionTerm(half3, eye, twist_3),
            "k1": ExtensionTerm(half3, eye, twist_j),
            "k2": ExtensionTerm(half3, eye, twist_j),
        }

    rule = CoproductRule(preset, _freeze(terms))
    return SpinOperatorSet(1, float(mu), preset, rule, _freeze(components))


def _kron_power(mat, n):
    out = np.eye(1, dtype=complex)
    for _ in range(n):
        out = np.kron(out, mat)
    return out


def extend_by_qubit(ops):
    """Append one qubit on the right of the register."""
    new = {}
    for label, mat in ops.components.items():
        term = ops.rule.terms[label]
        left_weight = _kron_power(term.left, ops.n)
        new[label] = np.kron(mat, term.right) + np.kron(left_weight, term.contrib)
    return SpinOperatorSet(ops.n + 1, ops.mu, ops.preset, ops.rule, _freeze(new))


def build_operators(preset, mu, n, verbatim_base=None):
    """Generators on an n-qubit register, built inductively from the base case."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    ops = base_operators(preset, mu, verbatim_base)
    for _ in range(n - 1):
        ops = extend_by_qubit(ops)
    return ops
