"""Command-line front end.

Every command reads a JSON experiment spec (``--spec``), seeds a single
PCG64 stream from ``--seed`` (or the spec's ``seed``) through
``numpy.random.SeedSequence`` and writes CSV (17 significant digits) or JSON
to ``--out`` (default stdout).  Exit codes: 0 success, 1 failed verification,
2 invalid spec, 3 numerical failure, 4 divergent model.
"""

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import diagnostics as dg
from .distributions import law_from_dict
from .engine import (ShotNoiseModel, sample_stationary, sample_transient,
                     shot_noise_transform)
from .errors import (DivergenceError, NumericalError, ShotNoiseError,
                     UnsupportedOperationError)
from .scenarios import REGISTRY, run_scenario
from .transforms import (bdlp_from_sd, invert_lt, jump_lt_from_sn, transform_from_dict)

EXIT_OK, EXIT_FAIL, EXIT_SCHEMA, EXIT_NUMERIC, EXIT_DIVERGENT = 0, 1, 2, 3, 4


class SpecError(ShotNoiseError, ValueError):
    """The experiment spec does not match the schema."""


def make_rng(seed):
    """Root 64-bit seed -> per-worker PCG64 streams via SeedSequence.spawn;
    the CLI is single-worker and uses the first child."""
    seed = int(seed)
    if not 0 <= seed < 2 ** 64:
        raise SpecError(f"seed must be a 64-bit unsigned integer, got {seed}")
    child = np.random.SeedSequence(seed).spawn(1)[0]
    return np.random.Generator(np.random.PCG64(child))


def _fmt(v):
    v = float(v)
    return format(v, ".17g") if math.isfinite(v) else ("inf" if v > 0 else ("-inf" if v < 0 else "nan"))


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _table(header, rows, fmt):
    if fmt == "csv":
        return _csv(header, rows)
    return json.dumps([dict(zip(header, map(float, r))) for r in rows]) + "\n"


def _require(spec, key):
    if key not in spec:
        raise SpecError(f"spec is missing {key!r}")
    return spec[key]


def _count(spec, key="n"):
    n = _require(spec, key)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SpecError(f"{key} must be a positive integer, got {n!r}")
    return n


def _tol(spec):
    tol = spec.get("tol", 1e-4)
    if not isinstance(tol, (int, float)) or not tol > 0:
        raise SpecError(f"tol must be positive, got {tol!r}")
    return float(tol)


def _grid(spec, key="grid", default=(1e-2, 1e2, 40)):
    g = spec.get(key)
    if g is None:
        lo, hi, k = default
        return np.logspace(math.log10(lo), math.log10(hi), k)
    if isinstance(g, dict):
        return np.logspace(math.log10(_require(g, "min")), math.log10(_require(g, "max")),
                           int(_require(g, "points")))
    arr = np.asarray(g, dtype=float)
    if arr.ndim != 1 or arr.size == 0 or np.any(arr <= 0):
        raise SpecError(f"{key} must be a non-empty list of positive numbers")
    return arr


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------


def cmd_sample(spec, rng, fmt):
    model = ShotNoiseModel.from_dict(_require(spec, "model"))
    n = _count(spec)
    op = spec.get("operation", "stationary")
    if op == "stationary":
        x = sample_stationary(model, n, _tol(spec), rng)
    elif op == "transform":
        x = shot_noise_transform(model, n, _tol(spec), rng)
    elif op == "transient":
        x = sample_transient(model, float(_require(spec, "t")), n, rng)
    else:
        raise SpecError(f"unknown sample operation {op!r}")
    if fmt == "csv":
        return _csv(["index", "value"], ((i, v) for i, v in enumerate(x)))
    return json.dumps([float(v) for v in x]) + "\n"


def cmd_transform(spec, rng, fmt):
    phi = transform_from_dict(_require(spec, "transform"))
    return _table(["s", "phi", "log_phi", "local_index"], phi.table(_grid(spec)), fmt)


def _log_table(tr, grid):
    lv = np.asarray(tr.log(grid), dtype=float)
    return np.column_stack([grid, np.exp(lv), lv])


def cmd_identify_bdlp(spec, rng, fmt):
    psi = bdlp_from_sd(transform_from_dict(_require(spec, "transform")))
    return _table(["s", "psi", "log_psi"], _log_table(psi, _grid(spec)), fmt)


def cmd_identify_jumps(spec, rng, fmt):
    g = jump_lt_from_sn(transform_from_dict(_require(spec, "transform")), _require(spec, "rho"))
    return _table(["s", "jump_lt", "log_jump_lt"], _log_table(g, _grid(spec)), fmt)


def cmd_invert(spec, rng, fmt):
    phi = transform_from_dict(_require(spec, "transform"))
    target = spec.get("target", "cdf")
    xs = _grid(spec, "x", default=(0.05, 20, 30))
    vals = invert_lt(phi, xs, target=target, method=spec.get("method", "auto"))
    return _table(["x", target], np.column_stack([xs, vals]), fmt)


def cmd_diagnose(spec, rng, fmt):
    if "law" in spec:
        data = law_from_dict(spec["law"])
    elif "transform" in spec:
        data = transform_from_dict(spec["transform"])
    elif "samples" in spec:
        data = np.asarray(spec["samples"], dtype=float)
    elif "model" in spec:
        data = sample_stationary(ShotNoiseModel.from_dict(spec["model"]), _count(spec),
                                 _tol(spec), rng)
    else:
        raise SpecError("diagnose needs one of 'law', 'transform', 'samples', 'model'")
    report = dg.classify(data, rng=rng)
    if fmt == "csv":
        d = report.to_dict()
        rows = [("verdict", d["verdict"]), ("index", d["index"]), ("ci_lo", d["ci"][0]),
                ("ci_hi", d["ci"][1]), ("method", d["method"])]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["field", "value"])
        for k, v in rows:
            w.writerow([k, _fmt(v) if isinstance(v, float) else v])
        return buf.getvalue()
    return json.dumps(report.to_dict(), indent=2) + "\n"


COMMANDS = {
    "sample": cmd_sample,
    "transform": cmd_transform,
    "identify-bdlp": cmd_identify_bdlp,
    "identify-jumps": cmd_identify_jumps,
    "diagnose": cmd_diagnose,
    "invert": cmd_invert,
}


def build_parser():
    p = argparse.ArgumentParser(prog="shotnoise", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in list(COMMANDS) + ["verify"]:
        sp = sub.add_parser(name)
        sp.add_argument("--spec", help="JSON experiment spec file ('-' for stdin)")
        sp.add_argument("--seed", type=int, default=None, help="64-bit root seed")
        sp.add_argument("--out", default=None, help="output path (default stdout)")
        sp.add_argument("--format", choices=("csv", "json"), default=None)
        if name == "verify":
            sp.add_argument("name", nargs="?", help="scenario name")
            sp.add_argument("--list", action="store_true", help="list scenarios")
            sp.add_argument("--n", type=int, default=None, help="Monte Carlo sample size")
    return p


def _load_spec(path):
    if path is None:
        return {}
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        spec = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read spec: {exc}") from exc
    if not isinstance(spec, dict):
        raise SpecError("spec must be a JSON object")
    return spec


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _verify(args, spec, rng):
    if args.list:
        width = max(len(k) for k in REGISTRY)
        return "".join(f"{k:<{width}}  {sc.anchor}\n" for k, sc in REGISTRY.items()), EXIT_OK
    name = args.name or spec.get("name")
    if name not in REGISTRY:
        raise SpecError(f"unknown scenario {name!r}; see `verify --list`")
    res = run_scenario(name, rng, args.n or spec.get("n"))
    return json.dumps(res.to_dict(), default=float) + "\n", EXIT_OK if res.passed else EXIT_FAIL


def run(argv=None):
    """Entry point; returns the exit status."""
    args = build_parser().parse_args(argv)
    try:
        spec = _load_spec(args.spec)
        seed = args.seed if args.seed is not None else spec.get("seed", 0)
        rng = make_rng(seed)
        fmt = args.format or spec.get("format", "csv")
        if fmt not in ("csv", "json"):
            raise SpecError(f"format must be csv or json, got {fmt!r}")
        if args.command == "verify":
            text, status = _verify(args, spec, rng)
        else:
            if args.spec is None:
                raise SpecError(f"{args.command} needs --spec")
            text, status = COMMANDS[args.command](spec, rng, fmt), EXIT_OK
    except DivergenceError as exc:
        _error("divergent", exc)
        return EXIT_DIVERGENT
    except NumericalError as exc:
        _error("numerical", exc)
        return EXIT_NUMERIC
    except (ValueError, TypeError, KeyError, UnsupportedOperationError) as exc:
        _error("schema", exc)
        return EXIT_SCHEMA
    _emit(text, args.out)
    return status


def _error(kind, exc):
    payload = {"error": kind, "type": type(exc).__name__, "message": str(exc)}
    sys.stderr.write(json.dumps(payload) + "\n")


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
