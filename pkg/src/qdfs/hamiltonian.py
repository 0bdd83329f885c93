"""Assembly of system+bath Hamiltonians of the dynamical-symmetry form.

The total Hamiltonian is a sum of terms P_a(K) (x) T_a where each P_a is
a polynomial in the register generators {K3, K+, K-} and each T_a is a
polynomial in the bath mode operators {b_k, b_k^dag}.  Polynomials are
plain term lists: tuples of (complex coefficient, word), where a word is
a tuple of symbol strings and the empty word is the identity.

System symbols:  "k3", "k+", "k-"
Bath symbols:    "b0", "bd0", "b1", "bd1", ...  (mode index appended)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bath import BathSpec, bath_operators

HERMITICITY_TOL = 1e-12


class HermiticityError(ValueError):
    """Raised when an assembled Hamiltonian is not self-adjoint."""

    def __init__(self, message, term_index=None, defects=None):
        super().__init__(message)
        self.term_index = term_index
        self.defects = defects or []


@dataclass(frozen=True)
class HamiltonianSpec:
    """Term list: ((system polynomial, bath polynomial), ...)."""

    terms: tuple

    def __post_init__(self):
        object.__setattr__(
            self,
            "terms",
            tuple(
                (tuple((complex(c), tuple(w)) for c, w in sys),
                 tuple((complex(c), tuple(w)) for c, w in bathp))
                for sys, bathp in self.terms
            ),
        )


def default_interaction(bath_spec, g, tprime, h_s=()):
    """The shipped coupling form.

    h = 1 (x) h_B  +  K+ (x) T  +  K- (x) T^dag  +  K3 (x) T'  [+ h_S (x) 1]

    with T = sum_k g_k b_k and T' = sum_k (tprime_k b_k + conj(tprime_k)
    b_k^dag).  g and tprime give one complex coefficient per mode; h_s is
    an optional system-only polynomial (term list over the K symbols).
    """
    n_modes = bath_spec.n_modes
    g = tuple(complex(x) for x in g)
    tprime = tuple(complex(x) for x in tprime)
    if len(g) != n_modes or len(tprime) != n_modes:
        raise ValueError("need one g and one tprime coefficient per bath mode")

    one = ((1.0, ()),)
    h_b_poly = tuple(
        (w, (f"bd{k}", f"b{k}")) for k, w in enumerate(bath_spec.frequencies)
    )
    t_poly = tuple((g[k], (f"b{k}",)) for k in range(n_modes))
    t_dag_poly = tuple((g[k].conjugate(), (f"bd{k}",)) for k in range(n_modes))
    tp_poly = tuple((tprime[k], (f"b{k}",)) for k in range(n_modes)) + tuple(
        (tprime[k].conjugate(), (f"bd{k}",)) for k in range(n_modes)
    )

    terms = [
        (one, h_b_poly),
        (((1.0, ("k+",)),), t_poly),
        (((1.0, ("k-",)),), t_dag_poly),
        (((1.0, ("k3",)),), tp_poly),
    ]
    if h_s:
        terms.append((tuple(h_s), one))
    return HamiltonianSpec(tuple(terms))


def _eval_poly(poly, table, dim):
    out = np.zeros((dim, dim), dtype=complex)
    for coeff, word in poly:
        mat = np.eye(dim, dtype=complex)
        for sym in word:
            if sym not in table:
                raise KeyError(f"unknown symbol {sym!r}")
            mat = mat @ table[sym]
        out += coeff * mat
    return out


def _symbol_tables(ops, bath_spec):
    mats = ops.generator_matrices()
    sys_table = {"k3": mats["k3"], "k+": mats["k+"], "k-": mats["k-"]}
    bops = bath_operators(bath_spec)
    bath_table = {}
    for k in range(bath_spec.n_modes):
        bath_table[f"b{k}"] = bops["b"][k]
        bath_table[f"bd{k}"] = bops["bdag"][k]
    return sys_table, bath_table


def assemble_hamiltonian(ops, bath_spec, spec, herm_tol=HERMITICITY_TOL):
    """Evaluate every term and sum; self-adjointness is a hard requirement.

    On failure the error reports the first term whose anti-Hermitian part
    actually survives in the total (attribution inside a jointly
    misconfigured pair of terms is ambiguous, so all per-term defect norms
    ride along on the exception).
    """
    sys_table, bath_table = _symbol_tables(ops, bath_spec)
    dim_v, dim_b = ops.dim, bath_spec.dim
    pieces = []
    for sys_poly, bath_poly in spec.terms:
        p = _eval_poly(sys_poly, sys_table, dim_v)
        t = _eval_poly(bath_poly, bath_table, dim_b)
        pieces.append(np.kron(p, t))
    h = sum(pieces) if pieces else np.zeros((dim_v * dim_b, dim_v * dim_b), complex)

    skew = h - h.conj().T
    defect = float(np.linalg.norm(skew))
    if defect > herm_tol * max(1.0, float(np.linalg.norm(h))):
        per_term = [float(np.linalg.norm(p - p.conj().T)) for p in pieces]
        offender = None
        for idx, piece in enumerate(pieces):
            overlap = abs(np.vdot(piece - piece.conj().T, skew))
            if overlap > herm_tol:
                offender = idx
                break
        raise HermiticityError(
            f"assembled Hamiltonian is not Hermitian (defect {defect:.3e}); "
            f"first contributing term index {offender}; per-term defects {per_term}",
            term_index=offender,
            defects=per_term,
        )
    return h


def chi_effective(spec, bath_spec):
    """Effective bath Hamiltonian: keep each term's scalar part.

    The character kills every monomial containing a register generator
    and fixes the unit, so h_eff = sum_a chi(P_a) T_a.
    """
    bops = bath_operators(bath_spec)
    bath_table = {}
    for k in range(bath_spec.n_modes):
        bath_table[f"b{k}"] = bops["b"][k]
        bath_table[f"bd{k}"] = bops["bdag"][k]
    dim_b = bath_spec.dim
    h_eff = np.zeros((dim_b, dim_b), dtype=complex)
    for sys_poly, bath_poly in spec.terms:
        chi = sum((coeff for coeff, word in sys_poly if not word), 0j)
        if chi != 0:
            h_eff += chi * _eval_poly(bath_poly, bath_table, dim_b)
    return h_eff
