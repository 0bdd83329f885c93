"""Report serialization: JSON envelope, CSV series, atomic file writes.

Every float that reaches an output file or stdout is pre-rounded to 15
significant digits (round half even via repr round-tripping of the '%.15g'
form) so JSON and CSV carry byte-identical numbers for the same quantity.
"""

from __future__ import annotations

import json
import os
import tempfile

CSV_HEADER = "t,fidelity,trace_distance,purity,energy"


def round15(x):
    """Value rounded to 15 significant digits."""
    return float(format(float(x), ".15g"))


def fmt15(x):
    """String form of the 15-significant-digit rounding."""
    return format(float(x), ".15g")


def _round_tree(obj):
    if isinstance(obj, float):
        return round15(obj)
    if isinstance(obj, dict):
        return {k: _round_tree(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_tree(v) for v in obj]
    return obj


def report_envelope(config, results, warnings, timings, version):
    """The four-key stdout document every subcommand emits."""
    return {
        "config": _round_tree(config),
        "version": version,
        "results": _round_tree(results),
        "warnings": _round_tree(warnings),
        "timings": _round_tree(timings),
    }


def render_json(envelope):
    return json.dumps(envelope, indent=2, sort_keys=False) + "\n"


def render_csv(report):
    """CSV text for an evolution time series, LF line endings.

    Density-matrix runs have no fidelity column value; the cell is left
    empty rather than dropped so the header stays fixed.
    """
    lines = [CSV_HEADER]
    fid = report.fidelity
    for i, t in enumerate(report.times):
        cells = [
            fmt15(t),
            fmt15(fid[i]) if fid is not None else "",
            fmt15(report.trace_distance[i]),
            fmt15(report.purity[i]),
            fmt15(report.energy[i]),
        ]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def atomic_write(path, text):
    """Write text to path via a same-directory temp file and rename."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qdfs-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
