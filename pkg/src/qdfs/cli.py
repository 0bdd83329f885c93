"""Command line surface: axioms, invariants, evolve, sweep.

Every subcommand prints one JSON document to stdout with the keys
config, version, results, warnings, timings, and returns an exit code:
0 success, 1 usage or config error, 2 symbolic axiom failure, 3 numeric
regression in a dynamics check.  Warnings never change exit codes.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from . import __version__
from .algebra import GEN_ANTIPODE, LaurentPoly
from .config import ConfigError, load_config, require_evolution
from .evolution import InvarianceError, theorem1_check, theorem2_check
from .hamiltonian import HermiticityError
from .hopf import check_fundamental_unitarity, check_hopf_axioms
from .invariant import classical_singlet_count, invariance_residual, joint_kernel
from .report import atomic_write, render_csv, render_json, report_envelope
from .spinops import PRESET_VERBATIM, build_operators
from .states import singlet_state

VERSION_STRING = f"qdfs {__version__}"


class _Parser(argparse.ArgumentParser):
    """argparse variant whose usage failures exit 1 instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fail(message):
    print(f"error: {message}", file=sys.stderr)
    return 1


def _emit(envelope, out_json=None):
    text = render_json(envelope)
    sys.stdout.write(text)
    if out_json:
        atomic_write(out_json, text)


def _wrong_antipode_table():
    """Negative-control antipode with the sign flipped on one generator."""
    table = dict(GEN_ANTIPODE)
    table["g"] = ("g", LaurentPoly.mu(1))
    return table


def cmd_axioms(args):
    t0 = time.perf_counter()
    table = _wrong_antipode_table() if args.inject_wrong_antipode else None
    report = check_hopf_axioms(args.max_word_len, table)
    unitarity = check_fundamental_unitarity()
    elapsed = time.perf_counter() - t0

    checks = [c.to_dict() for c in report.checks] + [unitarity.to_dict()]
    passed = report.passed and unitarity.passed
    resolved = {"max_word_len": args.max_word_len}
    if args.inject_wrong_antipode:
        resolved["inject_wrong_antipode"] = True
    envelope = report_envelope(
        config=resolved,
        results={
            "passed": passed,
            "axiom_groups": len(checks),
            "checks": checks,
        },
        warnings=[],
        timings={"total": elapsed},
        version=VERSION_STRING,
    )
    _emit(envelope)
    return 0 if passed else 2


def _kernel_report(cfg):
    """Shared worker for invariants and sweep rows."""
    ops = build_operators(cfg.preset, cfg.mu, cfg.n_qubits, cfg.verbatim_base)
    kernel = joint_kernel(ops, cfg.tolerances.kernel_rel_tol)
    return ops, kernel


def cmd_invariants(args):
    try:
        cfg = load_config(args.config)
    except ConfigError as exc:
        return _fail(str(exc))

    t0 = time.perf_counter()
    try:
        ops, kernel = _kernel_report(cfg)
    except ValueError as exc:
        return _fail(str(exc))
    elapsed = time.perf_counter() - t0

    basis = []
    residuals = []
    for state in kernel.basis:
        basis.append([[float(z.real), float(z.imag)] for z in state.amplitudes])
        residuals.append(list(invariance_residual(state, ops)))

    classical = (
        classical_singlet_count(cfg.n_qubits) if cfg.n_qubits % 2 == 0 else 0
    )
    results = {
        "n_qubits": cfg.n_qubits,
        "mu": cfg.mu,
        "preset": cfg.preset,
        "multiplicity": kernel.dimension,
        "classical_multiplicity": classical,
        "matches_classical": kernel.dimension == classical,
        "basis": basis,
        "residuals": residuals,
    }
    if cfg.n_qubits == 2:
        s = singlet_state(cfg.mu).amplitudes
        projector = kernel.projector()
        results["singlet_overlap"] = float(np.real(np.vdot(s, projector @ s)))

    warnings = []
    if cfg.preset == PRESET_VERBATIM:
        block = {
            "kind": "verbatim-generator-residuals",
            "message": "the literal k1/k2 extension matrices do not annihilate "
            "the deformed singlet; k3 does",
        }
        if cfg.n_qubits == 2:
            s = singlet_state(cfg.mu).amplitudes
            for name in ("k1", "k2", "k3"):
                mat = ops.components[name]
                block[f"{name}_singlet_residual"] = float(np.linalg.norm(mat @ s))
        warnings.append(block)

    envelope = report_envelope(
        config=cfg.resolved,
        results=results,
        warnings=warnings,
        timings={"total": elapsed},
        version=VERSION_STRING,
    )
    _emit(envelope, cfg.out_json)
    return 0


def cmd_evolve(args):
    try:
        cfg = load_config(args.config)
        require_evolution(cfg)
    except ConfigError as exc:
        return _fail(str(exc))

    timings = {}
    warnings = []
    results = {}
    regressions = []
    series = None

    try:
        if cfg.mixture is None:
            t0 = time.perf_counter()
            rep1 = theorem1_check(cfg)
            timings["factorization"] = time.perf_counter() - t0
            warnings.extend(rep1.metadata.pop("warnings"))
            results["factorization"] = {
                "min_fidelity": rep1.min_fidelity,
                "max_trace_distance": rep1.max_trace_distance,
                "min_purity": rep1.min_purity,
                "series": rep1.to_dict(),
            }
            series = rep1
            tol = cfg.tolerances.theorem1
            if not cfg.contrast:
                if rep1.min_fidelity < 1.0 - tol:
                    regressions.append(
                        f"factorization fidelity fell to {rep1.min_fidelity!r}, "
                        f"below 1 - {tol}"
                    )
                if rep1.max_trace_distance > tol:
                    regressions.append(
                        "reduced register state drifted by trace distance "
                        f"{rep1.max_trace_distance!r}, above {tol}"
                    )

        t0 = time.perf_counter()
        rep2 = theorem2_check(cfg)
        timings["induced-channel"] = time.perf_counter() - t0
        warnings.extend(rep2.metadata.pop("warnings"))
        results["induced_channel"] = {
            "max_trace_distance": rep2.max_trace_distance,
            "min_purity": rep2.min_purity,
            "series": rep2.to_dict(),
        }
        if series is None:
            series = rep2
        if not cfg.contrast and rep2.max_trace_distance > cfg.tolerances.theorem2:
            regressions.append(
                f"induced channel moved the register state by "
                f"{rep2.max_trace_distance!r}, above {cfg.tolerances.theorem2}"
            )
    except (InvarianceError, HermiticityError, ConfigError, ValueError) as exc:
        return _fail(str(exc))

    results["regressions"] = regressions
    results["passed"] = not regressions
    timings["total"] = sum(timings.values())

    envelope = report_envelope(
        config=cfg.resolved,
        results=results,
        warnings=warnings,
        timings=timings,
        version=VERSION_STRING,
    )
    _emit(envelope, cfg.out_json)

    csv_path = args.csv or cfg.out_csv
    if csv_path:
        atomic_write(csv_path, render_csv(series))
    return 3 if regressions else 0


def cmd_sweep(args):
    try:
        cfg = load_config(args.config)
    except ConfigError as exc:
        return _fail(str(exc))
    if not cfg.sweep_mu or not cfg.sweep_n:
        return _fail("sweep needs a nonempty [sweep] section with mu and n_qubits lists")

    t0 = time.perf_counter()
    rows = []
    try:
        for n in cfg.sweep_n:
            for mu in cfg.sweep_mu:
                ops = build_operators(cfg.preset, mu, n, cfg.verbatim_base)
                kernel = joint_kernel(ops, cfg.tolerances.kernel_rel_tol)
                classical = classical_singlet_count(n) if n % 2 == 0 else 0
                rows.append(
                    {
                        "n_qubits": n,
                        "mu": mu,
                        "multiplicity": kernel.dimension,
                        "classical_multiplicity": classical,
                        "matches_classical": kernel.dimension == classical,
                    }
                )
    except ValueError as exc:
        return _fail(str(exc))
    elapsed = time.perf_counter() - t0

    envelope = report_envelope(
        config=cfg.resolved,
        results={
            "rows": rows,
            "multiplicities": [r["multiplicity"] for r in rows],
            "all_match_classical": all(r["matches_classical"] for r in rows),
        },
        warnings=[],
        timings={"total": elapsed},
        version=VERSION_STRING,
    )
    _emit(envelope, cfg.out_json)
    return 0


def build_parser():
    parser = _Parser(prog="qdfs", description="Deformed-symmetry register checks.")
    parser.add_argument("--version", action="version", version=VERSION_STRING)
    sub = parser.add_subparsers(dest="command", required=True)

    p_ax = sub.add_parser("axioms", help="symbolic algebra checks")
    p_ax.add_argument("--max-word-len", type=int, default=3)
    p_ax.add_argument(
        "--inject-wrong-antipode", action="store_true", help=argparse.SUPPRESS
    )
    p_ax.set_defaults(func=cmd_axioms)

    p_inv = sub.add_parser("invariants", help="protected-subspace report")
    p_inv.add_argument("--config", required=True)
    p_inv.set_defaults(func=cmd_invariants)

    p_ev = sub.add_parser("evolve", help="dynamics checks with CSV series")
    p_ev.add_argument("--config", required=True)
    p_ev.add_argument("--csv", default=None)
    p_ev.set_defaults(func=cmd_evolve)

    p_sw = sub.add_parser("sweep", help="multiplicity table over a parameter grid")
    p_sw.add_argument("--config", required=True)
    p_sw.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except ValueError as exc:
        return _fail(str(exc))


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
