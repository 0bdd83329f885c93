"""Run configuration: a single TOML file with nested tables.

The schema is strict: unknown keys anywhere are rejected with their full
path, and physics values (deformation, couplings, bath, initial states)
carry no code defaults.  Structural defaults (time grid, tolerances) are
filled in here and echoed back in the resolved dictionary that every
report embeds.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

import numpy as np

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .bath import BathSpec
from .spinops import PRESETS, PRESET_VERBATIM

DEFAULT_T_MAX = 10.0
DEFAULT_POINTS = 101

DEFAULT_TOLERANCES = {
    "theorem1": 1e-9,
    "theorem2": 1e-9,
    "invariance": 1e-9,
    "kernel_rel_tol": 1e-10,
    "hermiticity": 1e-12,
}

_SYS_SYMBOLS = {"k3", "k+", "k-"}


class ConfigError(ValueError):
    """Configuration rejected; message carries the offending key path."""


def _fail(path, message):
    raise ConfigError(f"{path}: {message}")


def _check_keys(table, allowed, path):
    unknown = set(table) - set(allowed)
    if unknown:
        _fail(path, f"unknown keys {sorted(unknown)}; allowed: {sorted(allowed)}")


def _get_table(data, key, path):
    value = data.get(key)
    if value is None:
        return None
    if not isinstance(value, dict):
        _fail(f"{path}.{key}", "expected a table")
    return value


def _number(value, path, allow_bool=False):
    if isinstance(value, bool) and not allow_bool:
        _fail(path, "expected a number, got a boolean")
    if not isinstance(value, (int, float)):
        _fail(path, f"expected a number, got {type(value).__name__}")
    return float(value)


def _integer(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(path, f"expected an integer, got {type(value).__name__}")
    return value


def _complexish(value, path):
    """A real number or an [re, im] pair."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)
    ):
        return complex(value[0], value[1])
    _fail(path, "expected a number or an [re, im] pair")


def _complex_out(z):
    return [z.real, z.imag]


def _amplitudes(value, length, path):
    if not isinstance(value, list) or len(value) != length:
        _fail(path, f"expected a list of {length} amplitudes")
    return np.array([_complexish(x, f"{path}[{i}]") for i, x in enumerate(value)])


@dataclass(frozen=True)
class Tolerances:
    theorem1: float
    theorem2: float
    invariance: float
    kernel_rel_tol: float
    hermiticity: float


@dataclass(frozen=True, eq=False)
class RunConfig:
    mu: float
    n_qubits: int
    preset: str
    verbatim_base: dict | None
    bath: BathSpec | None
    g: tuple | None
    tprime: tuple | None
    h_s: tuple
    t_max: float
    points: int
    register: object
    mixture: tuple | None
    bath_state: object
    beta: float | None
    contrast: bool
    seed: int | None
    tolerances: Tolerances
    sweep_mu: tuple | None
    sweep_n: tuple | None
    out_json: str | None
    out_csv: str | None
    resolved: dict = field(repr=False, default_factory=dict)


def _parse_model(data):
    table = _get_table(data, "model", "config")
    if table is None:
        _fail("model", "section is required")
    _check_keys(table, {"mu", "n_qubits", "preset", "verbatim_base"}, "model")
    for key in ("mu", "n_qubits", "preset"):
        if key not in table:
            _fail(f"model.{key}", "required")
    mu = _number(table["mu"], "model.mu")
    if mu == 0:
        _fail("model.mu", "must be nonzero")
    n = _integer(table["n_qubits"], "model.n_qubits")
    if n < 1:
        _fail("model.n_qubits", "must be >= 1")
    preset = table["preset"]
    if preset not in PRESETS:
        _fail("model.preset", f"unknown preset {preset!r}; expected one of {PRESETS}")

    base = None
    if "verbatim_base" in table:
        if preset != PRESET_VERBATIM:
            _fail("model.verbatim_base", "only meaningful for the paper-verbatim preset")
        raw = table["verbatim_base"]
        if not isinstance(raw, dict):
            _fail("model.verbatim_base", "expected a table")
        _check_keys(raw, {"k3", "k1", "k2"}, "model.verbatim_base")
        base = {}
        for key, rows in raw.items():
            path = f"model.verbatim_base.{key}"
            if not isinstance(rows, list) or len(rows) != 2:
                _fail(path, "expected a 2x2 matrix as two rows")
            mat = [[_complexish(x, f"{path}[{i}][{j}]") for j, x in enumerate(row)]
                   for i, row in enumerate(rows)]
            if any(len(row) != 2 for row in mat):
                _fail(path, "expected a 2x2 matrix as two rows")
            base[key] = mat
    return mu, n, preset, base


def _parse_bath(data):
    table = _get_table(data, "bath", "config")
    if table is None:
        return None
    _check_keys(table, {"frequencies", "fock_cutoff"}, "bath")
    for key in ("frequencies", "fock_cutoff"):
        if key not in table:
            _fail(f"bath.{key}", "required")
    freqs = table["frequencies"]
    if not isinstance(freqs, list) or not freqs:
        _fail("bath.frequencies", "expected a nonempty list of numbers")
    freqs = tuple(_number(w, f"bath.frequencies[{i}]") for i, w in enumerate(freqs))
    cutoff = _integer(table["fock_cutoff"], "bath.fock_cutoff")
    try:
        return BathSpec(freqs, cutoff)
    except ValueError as exc:
        raise ConfigError(f"bath: {exc}") from exc


def _per_mode(value, n_modes, path):
    # a bare number applies to every mode; a list gives one entry per mode,
    # where each entry is a number or an [re, im] pair
    if isinstance(value, list):
        entries = value
        if len(entries) != n_modes:
            _fail(path, f"expected one coefficient per mode ({n_modes})")
    else:
        entries = [value] * n_modes
    return tuple(_complexish(x, f"{path}[{i}]") for i, x in enumerate(entries))


def _parse_couplings(data, bath):
    table = _get_table(data, "couplings", "config")
    if table is None:
        return None, None, ()
    if bath is None:
        _fail("couplings", "a bath section is required when couplings are given")
    _check_keys(table, {"g", "tprime", "h_s"}, "couplings")
    for key in ("g", "tprime"):
        if key not in table:
            _fail(f"couplings.{key}", "required")
    g = _per_mode(table["g"], bath.n_modes, "couplings.g")
    tprime = _per_mode(table["tprime"], bath.n_modes, "couplings.tprime")
    h_s = []
    raw = table.get("h_s", [])
    if not isinstance(raw, list):
        _fail("couplings.h_s", "expected an array of tables")
    for i, entry in enumerate(raw):
        path = f"couplings.h_s[{i}]"
        if not isinstance(entry, dict):
            _fail(path, "expected a table with coeff and word")
        _check_keys(entry, {"coeff", "word"}, path)
        if "coeff" not in entry or "word" not in entry:
            _fail(path, "both coeff and word are required")
        coeff = _complexish(entry["coeff"], f"{path}.coeff")
        word = entry["word"]
        if not isinstance(word, list) or any(sym not in _SYS_SYMBOLS for sym in word):
            _fail(f"{path}.word", f"expected a list of symbols from {sorted(_SYS_SYMBOLS)}")
        h_s.append((coeff, tuple(word)))
    return g, tprime, tuple(h_s)


def _parse_time_grid(data):
    table = _get_table(data, "time_grid", "config")
    if table is None:
        return DEFAULT_T_MAX, DEFAULT_POINTS
    _check_keys(table, {"t_max", "points"}, "time_grid")
    t_max = _number(table.get("t_max", DEFAULT_T_MAX), "time_grid.t_max")
    if t_max <= 0:
        _fail("time_grid.t_max", "must be positive")
    points = _integer(table.get("points", DEFAULT_POINTS), "time_grid.points")
    if points < 2:
        _fail("time_grid.points", "must be >= 2")
    return t_max, points


def _parse_initial(data, n_qubits):
    table = _get_table(data, "initial", "config")
    if table is None:
        return None, None, None, None, False, None
    _check_keys(
        table, {"register", "mixture", "bath", "beta", "contrast", "seed"}, "initial"
    )
    if "register" not in table or "bath" not in table:
        _fail("initial", "register and bath are both required")

    register = table["register"]
    if isinstance(register, str):
        if register == "singlet":
            if n_qubits != 2:
                _fail("initial.register", "the singlet is a 2-qubit state")
        elif register.startswith("kernel:"):
            tail = register.split(":", 1)[1]
            if not tail.isdigit():
                _fail("initial.register", "kernel index must be a nonnegative integer")
        elif all(ch in "+-" for ch in register) and register:
            if len(register) != n_qubits:
                _fail("initial.register", f"pattern length must be {n_qubits}")
        else:
            _fail(
                "initial.register",
                "expected 'singlet', 'kernel:<i>', a +/- pattern, or amplitudes",
            )
    else:
        register = _amplitudes(register, 2**n_qubits, "initial.register")

    mixture = None
    if "mixture" in table:
        raw = table["mixture"]
        if not isinstance(raw, list) or not raw:
            _fail("initial.mixture", "expected a nonempty list of weights")
        mixture = tuple(_number(w, f"initial.mixture[{i}]") for i, w in enumerate(raw))
        if any(w < 0 for w in mixture):
            _fail("initial.mixture", "weights must be nonnegative")
        if abs(sum(mixture) - 1.0) > 1e-9:
            _fail("initial.mixture", "weights must sum to 1")

    bath_state = table["bath"]
    beta = None
    if isinstance(bath_state, str):
        if bath_state not in ("ground", "thermal", "random"):
            _fail("initial.bath", "expected 'ground', 'thermal', 'random', or amplitudes")
        if bath_state == "thermal":
            if "beta" not in table:
                _fail("initial.beta", "required for a thermal bath")
            beta = _number(table["beta"], "initial.beta")
            if beta <= 0:
                _fail("initial.beta", "must be positive")
    elif isinstance(bath_state, list):
        bath_state = [
            _complexish(x, f"initial.bath[{i}]") for i, x in enumerate(bath_state)
        ]
    else:
        _fail("initial.bath", "expected 'ground', 'thermal', 'random', or amplitudes")
    if "beta" in table and not (isinstance(table["bath"], str) and table["bath"] == "thermal"):
        _fail("initial.beta", "only meaningful for a thermal bath")

    contrast = table.get("contrast", False)
    if not isinstance(contrast, bool):
        _fail("initial.contrast", "expected a boolean")

    seed = None
    if "seed" in table:
        seed = _integer(table["seed"], "initial.seed")

    return register, mixture, bath_state, beta, contrast, seed


def _parse_tolerances(data):
    table = _get_table(data, "tolerances", "config")
    values = dict(DEFAULT_TOLERANCES)
    if table is not None:
        _check_keys(table, set(DEFAULT_TOLERANCES), "tolerances")
        for key, raw in table.items():
            val = _number(raw, f"tolerances.{key}")
            if val <= 0:
                _fail(f"tolerances.{key}", "must be positive")
            values[key] = val
    return Tolerances(**values)


def _parse_sweep(data):
    table = _get_table(data, "sweep", "config")
    if table is None:
        return None, None
    _check_keys(table, {"mu", "n_qubits"}, "sweep")
    for key in ("mu", "n_qubits"):
        if key not in table:
            _fail(f"sweep.{key}", "required")
    mus = table["mu"]
    ns = table["n_qubits"]
    if not isinstance(mus, list) or not isinstance(ns, list):
        _fail("sweep", "mu and n_qubits must be lists")
    mus = tuple(_number(m, f"sweep.mu[{i}]") for i, m in enumerate(mus))
    if any(m == 0 for m in mus):
        _fail("sweep.mu", "mu values must be nonzero")
    ns_out = []
    for i, n in enumerate(ns):
        n = _integer(n, f"sweep.n_qubits[{i}]")
        if n < 2:
            _fail(f"sweep.n_qubits[{i}]", "must be >= 2")
        ns_out.append(n)
    return mus, tuple(ns_out)


def _parse_output(data):
    table = _get_table(data, "output", "config")
    if table is None:
        return None, None
    _check_keys(table, {"json", "csv"}, "output")
    out = []
    for key in ("json", "csv"):
        value = table.get(key)
        if value is not None and not isinstance(value, str):
            _fail(f"output.{key}", "expected a path string")
        out.append(value)
    return tuple(out)


def from_dict(data):
    """Validate a parsed config dictionary and resolve defaults."""
    if not isinstance(data, dict):
        raise ConfigError("config: expected a table at top level")
    _check_keys(
        data,
        {"model", "bath", "couplings", "time_grid", "initial", "tolerances",
         "sweep", "output"},
        "config",
    )
    mu, n_qubits, preset, verbatim_base = _parse_model(data)
    bath = _parse_bath(data)
    g, tprime, h_s = _parse_couplings(data, bath)
    t_max, points = _parse_time_grid(data)
    register, mixture, bath_state, beta, contrast, seed = _parse_initial(data, n_qubits)
    tolerances = _parse_tolerances(data)
    sweep_mu, sweep_n = _parse_sweep(data)
    out_json, out_csv = _parse_output(data)

    resolved = {"model": {"mu": mu, "n_qubits": n_qubits, "preset": preset}}
    if verbatim_base is not None:
        resolved["model"]["verbatim_base"] = {
            key: [[_complex_out(x) for x in row] for row in mat]
            for key, mat in verbatim_base.items()
        }
    if bath is not None:
        resolved["bath"] = {
            "frequencies": list(bath.frequencies),
            "fock_cutoff": bath.fock_cutoff,
        }
    if g is not None:
        resolved["couplings"] = {
            "g": [_complex_out(z) for z in g],
            "tprime": [_complex_out(z) for z in tprime],
            "h_s": [
                {"coeff": _complex_out(c), "word": list(w)} for c, w in h_s
            ],
        }
    resolved["time_grid"] = {"t_max": t_max, "points": points}
    if register is not None:
        initial = {
            "register": register if isinstance(register, str)
            else [_complex_out(z) for z in register],
            "bath": bath_state if isinstance(bath_state, str)
            else [_complex_out(z) for z in bath_state],
            "contrast": contrast,
        }
        if mixture is not None:
            initial["mixture"] = list(mixture)
        if beta is not None:
            initial["beta"] = beta
        if seed is not None:
            initial["seed"] = seed
        resolved["initial"] = initial
    resolved["tolerances"] = {
        "theorem1": tolerances.theorem1,
        "theorem2": tolerances.theorem2,
        "invariance": tolerances.invariance,
        "kernel_rel_tol": tolerances.kernel_rel_tol,
        "hermiticity": tolerances.hermiticity,
    }
    if sweep_mu is not None:
        resolved["sweep"] = {"mu": list(sweep_mu), "n_qubits": list(sweep_n)}
    if out_json or out_csv:
        resolved["output"] = {}
        if out_json:
            resolved["output"]["json"] = out_json
        if out_csv:
            resolved["output"]["csv"] = out_csv

    return RunConfig(
        mu=mu,
        n_qubits=n_qubits,
        preset=preset,
        verbatim_base=verbatim_base,
        bath=bath,
        g=g,
        tprime=tprime,
        h_s=h_s,
        t_max=t_max,
        points=points,
        register=register,
        mixture=mixture,
        bath_state=bath_state,
        beta=beta,
        contrast=contrast,
        seed=seed,
        tolerances=tolerances,
        sweep_mu=sweep_mu,
        sweep_n=sweep_n,
        out_json=out_json,
        out_csv=out_csv,
        resolved=resolved,
    )


def load_config(path):
    """Parse and validate a TOML config file."""
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"config file is not valid TOML: {exc}") from exc
    return from_dict(data)


def require_evolution(cfg):
    """Raise unless the config carries everything an evolution run needs."""
    missing = []
    if cfg.bath is None:
        missing.append("bath")
    if cfg.g is None:
        missing.append("couplings")
    if cfg.register is None:
        missing.append("initial")
    if missing:
        raise ConfigError(
            f"config: sections required for evolution are missing: {missing}"
        )
    return cfg
