"""Unitary system+bath evolution and the two protection checks.

theorem1_check drives a pure product state u (x) zeta and compares the
joint evolution against the factorized prediction u (x) exp(-i h_eff t)
zeta; for a protected u the two agree identically, so unit fidelity is
the pass condition and any drop is a regression (or, for contrast runs,
the point being demonstrated).

theorem2_check drives a mixed product state rho_S (x) rho_B and reports
the trace distance between the induced register channel output
tr_B rho(t) and the initial rho_S; for rho_S supported on the invariant
subspace the channel is trivial for every bath state.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .bath import bath_operators
from .hamiltonian import assemble_hamiltonian, chi_effective, default_interaction
from .invariant import invariance_residual, joint_kernel
from .spinops import build_operators
from .states import QState, product_state, singlet_state

HERM_TOL = 1e-12


class InvarianceError(ValueError):
    """Initial state violates the protection precondition."""


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Dense density operator, optionally with bipartite structure.

    dims, when present, records (dim_V, dim_B) for a register (x) bath
    split.  Construction validates unit trace and positivity within the
    documented tolerances.
    """

    matrix: np.ndarray
    dims: tuple | None = None

    TRACE_TOL = 1e-12
    PSD_TOL = 1e-10

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise ValueError("density matrix must be square")
        if self.dims is not None:
            dv, db = self.dims
            if dv * db != mat.shape[0]:
                raise ValueError("bipartite dims do not match the matrix size")
        object.__setattr__(self, "matrix", mat)

    def validate(self, trace_tol=TRACE_TOL, psd_tol=PSD_TOL):
        trace = complex(np.trace(self.matrix))
        if abs(trace - 1.0) > trace_tol:
            raise ValueError(f"trace {trace} differs from 1 beyond {trace_tol}")
        herm = float(np.linalg.norm(self.matrix - self.matrix.conj().T))
        if herm > 1e-10:
            raise ValueError(f"matrix is not Hermitian (defect {herm:.3e})")
        min_eig = float(np.linalg.eigvalsh(self.matrix)[0])
        if min_eig < -psd_tol:
            raise ValueError(f"negative eigenvalue {min_eig:.3e}")
        return self

    @classmethod
    def pure(cls, vector, dims=None):
        vec = np.asarray(vector, dtype=complex)
        return cls(np.outer(vec, vec.conj()), dims)

    @classmethod
    def product(cls, rho_s, rho_b):
        ds = rho_s.shape[0]
        db = rho_b.shape[0]
        return cls(np.kron(rho_s, rho_b), (ds, db))


class Propagator:
    """exp(-i h t) action from one Hermitian eigendecomposition.

    Diagonalizes once at construction; every time point afterwards is a
    phase multiply.
    """

    def __init__(self, h, herm_tol=HERM_TOL):
        h = np.asarray(h, dtype=complex)
        defect = float(np.linalg.norm(h - h.conj().T))
        scale = max(1.0, float(np.linalg.norm(h)))
        if defect > herm_tol * scale:
            raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
        self.energies, self.vectors = np.linalg.eigh(h)
        self.h = h

    def unitary(self, t):
        phases = np.exp(-1j * self.energies * t)
        return (self.vectors * phases) @ self.vectors.conj().T

    def apply_vector(self, psi, t):
        coeffs = self.vectors.conj().T @ psi
        return self.vectors @ (np.exp(-1j * self.energies * t) * coeffs)

    def apply_density(self, rho, t):
        u = self.unitary(t)
        return u @ rho @ u.conj().T


def evolve(h, state, t):
    """One-shot evolution of a vector or a DensityMatrix.

    Grid loops should construct a Propagator instead so the
    eigendecomposition is reused.
    """
    prop = Propagator(h)
    if isinstance(state, DensityMatrix):
        return DensityMatrix(prop.apply_density(state.matrix, t), state.dims)
    return prop.apply_vector(np.asarray(state, dtype=complex), t)


def partial_trace_bath(rho):
    """Trace out the bath factor of a bipartite density matrix."""
    if rho.dims is None:
        raise ValueError("density matrix has no recorded bipartite structure")
    dv, db = rho.dims
    blocks = rho.matrix.reshape(dv, db, dv, db)
    return DensityMatrix(np.trace(blocks, axis1=1, axis2=3), None)


def reduced_register_state(psi, dim_v, dim_b):
    """tr_B |psi><psi| without forming the joint outer product."""
    block = np.asarray(psi, dtype=complex).reshape(dim_v, dim_b)
    return block @ block.conj().T


def trace_distance(a, b):
    """Half the trace norm of the difference of two Hermitian matrices."""
    eigs = np.linalg.eigvalsh(a - b)
    return 0.5 * float(np.sum(np.abs(eigs)))


def purity(rho):
    return float(np.real(np.trace(rho @ rho)))


# initial-state builders ------------------------------------------------------

def bath_ground_vector(bath_spec):
    vec = np.zeros(bath_spec.dim, dtype=complex)
    vec[0] = 1.0
    return vec


def bath_density(kind, bath_spec, beta=None, seed=None):
    """Bath density matrix: 'ground', 'thermal', 'random', or amplitudes."""
    dim = bath_spec.dim
    if isinstance(kind, (list, tuple, np.ndarray)):
        vec = np.asarray(kind, dtype=complex)
        if vec.shape != (dim,):
            raise ValueError(f"bath amplitudes must have length {dim}")
        norm = np.linalg.norm(vec)
        if norm == 0:
            raise ValueError("bath amplitudes must not vanish")
        vec = vec / norm
        return np.outer(vec, vec.conj())
    if kind == "ground":
        vec = bath_ground_vector(bath_spec)
        return np.outer(vec, vec.conj())
    if kind == "thermal":
        if beta is None or beta <= 0:
            raise ValueError("thermal bath needs beta > 0")
        h_b = bath_operators(bath_spec)["h_b"]
        weights = np.exp(-beta * np.real(np.diag(h_b)))
        weights = weights / weights.sum()
        return np.diag(weights).astype(complex)
    if kind == "random":
        if seed is None:
            seed = int(os.environ.get("QDFS_SEED", "0"))
        rng = np.random.default_rng(seed)
        a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        rho = a @ a.conj().T
        return rho / np.trace(rho)
    raise ValueError(f"unknown bath state {kind!r}")


def resolve_register_state(cfg, kernel):
    """Concrete register vector for the configured initial state."""
    spec = cfg.register
    if isinstance(spec, str):
        if spec == "singlet":
            return singlet_state(cfg.mu)
        if spec.startswith("kernel:"):
            index = int(spec.split(":", 1)[1])
            if index >= kernel.dimension:
                raise InvarianceError(
                    f"kernel index {index} out of range; dimension is {kernel.dimension}"
                )
            return kernel.basis[index]
        return product_state(spec)
    vec = np.asarray(spec, dtype=complex)
    norm = np.linalg.norm(vec)
    if norm == 0:
        raise ValueError("register amplitudes must not vanish")
    return QState(vec / norm, cfg.n_qubits)


# reports ---------------------------------------------------------------------

@dataclass
class EvolutionReport:
    """Time series emitted by a dynamics run.

    fidelity is None for density-matrix runs (no factorized pure
    prediction there); every series shares the time grid.
    """

    times: list
    fidelity: list | None
    trace_distance: list
    purity: list
    energy: list
    metadata: dict = field(default_factory=dict)

    @property
    def min_fidelity(self):
        return min(self.fidelity) if self.fidelity else None

    @property
    def max_trace_distance(self):
        return max(self.trace_distance)

    @property
    def min_purity(self):
        return min(self.purity)

    def to_dict(self):
        out = {
            "times": list(self.times),
            "trace_distance": list(self.trace_distance),
            "purity": list(self.purity),
            "energy": list(self.energy),
            "metadata": dict(self.metadata),
        }
        if self.fidelity is not None:
            out["fidelity"] = list(self.fidelity)
        return out


def _build_model(cfg):
    ops = build_operators(cfg.preset, cfg.mu, cfg.n_qubits, cfg.verbatim_base)
    kernel = joint_kernel(ops, cfg.tolerances.kernel_rel_tol)
    spec = default_interaction(cfg.bath, cfg.g, cfg.tprime, cfg.h_s)
    h = assemble_hamiltonian(ops, cfg.bath, spec, cfg.tolerances.hermiticity)
    h_eff = chi_effective(spec, cfg.bath)
    return ops, kernel, spec, h, h_eff


def _time_grid(cfg):
    return np.linspace(0.0, cfg.t_max, cfg.points)


def theorem1_check(cfg):
    """Factorization check for a pure product initial state.

    For every grid time, fidelity |<u (x) zeta_eff(t), psi(t)>| against the
    factorized prediction, the trace distance of the reduced register
    state to |u><u|, its purity, and the conserved energy.  Unless the
    config marks the run as a contrast, the initial register state must
    pass the invariance precondition.
    """
    ops, kernel, spec, h, h_eff = _build_model(cfg)
    u = resolve_register_state(cfg, kernel)
    residuals = invariance_residual(u, ops)
    warnings = []
    if max(residuals) > cfg.tolerances.invariance:
        if not cfg.contrast:
            raise InvarianceError(
                f"initial register state is not invariant: residuals {residuals} "
                f"exceed {cfg.tolerances.invariance}"
            )
        warnings.append(
            {
                "kind": "contrast-initial-state",
                "message": "initial register state is intentionally unprotected",
                "residuals": list(residuals),
            }
        )

    if isinstance(cfg.bath_state, str) and cfg.bath_state != "ground":
        zeta = bath_ground_vector(cfg.bath)
        warnings.append(
            {
                "kind": "bath-vector-fallback",
                "message": "factorization check needs a pure bath vector; "
                "using the Fock ground state instead of "
                f"{cfg.bath_state!r}",
            }
        )
    elif isinstance(cfg.bath_state, str):
        zeta = bath_ground_vector(cfg.bath)
    else:
        zeta = np.asarray(cfg.bath_state, dtype=complex)
        if zeta.shape != (cfg.bath.dim,):
            raise ValueError(f"bath amplitudes must have length {cfg.bath.dim}")
        zeta = zeta / np.linalg.norm(zeta)

    psi0 = np.kron(u.amplitudes, zeta)
    prop = Propagator(h, cfg.tolerances.hermiticity)
    prop_eff = Propagator(h_eff, cfg.tolerances.hermiticity)
    target = np.outer(u.amplitudes, u.amplitudes.conj())

    times = _time_grid(cfg)
    fid, tdist, pur, energy = [], [], [], []
    for t in times:
        psi = prop.apply_vector(psi0, t)
        zeta_t = prop_eff.apply_vector(zeta, t)
        prediction = np.kron(u.amplitudes, zeta_t)
        fid.append(float(abs(np.vdot(prediction, psi))))
        reduced = reduced_register_state(psi, ops.dim, cfg.bath.dim)
        tdist.append(trace_distance(reduced, target))
        pur.append(purity(reduced))
        energy.append(float(np.real(np.vdot(psi, h @ psi))))

    return EvolutionReport(
        times=list(map(float, times)),
        fidelity=fid,
        trace_distance=tdist,
        purity=pur,
        energy=energy,
        metadata={
            "check": "factorization",
            "initial_residuals": list(residuals),
            "kernel_dimension": kernel.dimension,
            "contrast": cfg.contrast,
            "warnings": warnings,
        },
    )


def theorem2_check(cfg):
    """Trivial-channel check for a mixed product initial state.

    rho_S is either the projector of the configured register state or the
    configured mixture of kernel-basis projectors; rho_B is any valid bath
    density matrix.  Reports the trace distance of tr_B rho(t) to rho_S at
    every grid time.
    """
    ops, kernel, spec, h, h_eff = _build_model(cfg)
    warnings = []

    if cfg.mixture is not None:
        if len(cfg.mixture) > kernel.dimension:
            raise InvarianceError(
                f"mixture has {len(cfg.mixture)} weights but the kernel dimension "
                f"is {kernel.dimension}"
            )
        rho_s = np.zeros((ops.dim, ops.dim), dtype=complex)
        for weight, state in zip(cfg.mixture, kernel.basis):
            rho_s += weight * np.outer(state.amplitudes, state.amplitudes.conj())
    else:
        u = resolve_register_state(cfg, kernel)
        rho_s = np.outer(u.amplitudes, u.amplitudes.conj())

    projector = kernel.projector()
    leak = float(np.linalg.norm(rho_s - projector @ rho_s @ projector))
    if leak > cfg.tolerances.invariance:
        if not cfg.contrast:
            raise InvarianceError(
                f"rho_S leaks outside the invariant subspace (norm {leak:.3e} "
                f"exceeds {cfg.tolerances.invariance})"
            )
        warnings.append(
            {
                "kind": "contrast-initial-state",
                "message": "rho_S intentionally leaves the invariant subspace",
                "leak": leak,
            }
        )

    rho_b = bath_density(cfg.bath_state, cfg.bath, cfg.beta, cfg.seed)
    rho0 = DensityMatrix.product(rho_s, rho_b).validate()
    prop = Propagator(h, cfg.tolerances.hermiticity)

    times = _time_grid(cfg)
    tdist, pur, energy = [], [], []
    for t in times:
        rho_t = prop.apply_density(rho0.matrix, t)
        reduced = partial_trace_bath(DensityMatrix(rho_t, rho0.dims)).matrix
        tdist.append(trace_distance(reduced, rho_s))
        pur.append(purity(reduced))
        energy.append(float(np.real(np.trace(h @ rho_t))))

    return EvolutionReport(
        times=list(map(float, times)),
        fidelity=None,
        trace_distance=tdist,
        purity=pur,
        energy=energy,
        metadata={
            "check": "trivial-channel",
            "support_leak": leak,
            "kernel_dimension": kernel.dimension,
            "contrast": cfg.contrast,
            "warnings": warnings,
        },
    )
