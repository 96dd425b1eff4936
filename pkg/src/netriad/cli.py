"""Command-line front end emitting deterministic CSV/JSON artifacts.

Subcommands:

- ``simulate``: ensemble of one generative model; per-realization
  measures, summary moments, and a net-difference histogram.
- ``sweep-mu``: mean net difference across an interpolation grid, for one
  or more edge probabilities, optionally with selective-rewiring curves.
- ``pairwise-null``: observed overlap vs randomized baseline for every
  layer pair of a dataset.
- ``triad``: full rewiring analysis of a dataset or generated triplet,
  for each cyclic role assignment of the conditioning layer.
- ``rssi-sweep``: equal-count weight windows on one layer, rewiring
  analysis per window.

Every artifact embeds the result-affecting configuration (command, seed,
model/dataset parameters) plus the package version. Execution details
that cannot change results (``--workers``, ``--output``) are excluded, so
two runs of the same analysis are byte-identical regardless of worker
count or destination. Artifacts are built fully in memory and written in
one step; a failed run writes nothing.

Exit codes: 0 ok, 2 configuration error, 3 data error, 4 degenerate-math
error. Failures emit a machine-readable JSON record on stderr.
"""

from __future__ import annotations

import argparse
import functools
import itertools
import json
import math
import sys

import joblib

from . import __version__
from .errors import (ConfigError, DataError, DegenerateMathError,
                     EmptyConditionedUnion, EmptyUnion)
from .generators import MODELS, GenParams, generate
from .ingest import binarize_layer, parse_multiplex, weight_windows
from .nullmodels import full_rewire, selective_rewire, triad_indices
from .seeding import child_seed, derive_int_seed
from .similarity import delta, nj, nj_partial, pairwise_null
from .stats import histogram, summarize


def _fmt(value) -> str:
    """CSV cell: floats at 12 significant digits for stable diffs."""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _jsonable(obj):
    """Recursively make an object JSON-safe (non-finite floats become
    strings so the artifact stays standard JSON)."""
    if isinstance(obj, float):
        if math.isnan(obj):
            return "nan"
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return obj
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit_json(command: str, config: dict, results: dict) -> str:
    report = {"command": command, "version": __version__,
              "config": config, "results": _jsonable(results)}
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _emit_csv(command: str, config: dict,
              sections: list[tuple[str, list[str], list[list]]]) -> str:
    lines = [f"# netriad {command} v{__version__}",
             "# config " + json.dumps(config, sort_keys=True)]
    for name, header, rows in sections:
        lines.append(f"# section {name}")
        lines.append(",".join(header))
        for row in rows:
            lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _pmap(fn, n: int, workers: int) -> list:
    """Map fn over range(n), ordered by index regardless of workers."""
    if workers <= 1:
        return [fn(i) for i in range(n)]
    return joblib.Parallel(n_jobs=workers)(
        joblib.delayed(fn)(i) for i in range(n))


def _summary_dict(values) -> dict:
    s = summarize(values)
    return {"n": s.n, "mean": s.mean, "std": s.std,
            "min": s.min, "max": s.max}


def _histogram_dict(values, bins) -> dict:
    h = histogram(values, bins)
    return {"bin_edges": list(h.bin_edges), "counts": list(h.counts),
            "underflow": h.underflow, "overflow": h.overflow}


def _gen_params(args) -> GenParams:
    return GenParams(n_nodes=args.nodes, p=args.p, q=args.q,
                     mu=args.mu, model=args.model)


def _load_dataset(path):
    try:
        return parse_multiplex(path)
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc


# ---------------------------------------------------------------- simulate

def _sim_one(params, seed, i):
    t = generate(params, child_seed(seed, i))
    try:
        v_nj = nj(t.a, t.b)
        v_njp = nj_partial(t.a, t.b, t.c)
    except (EmptyUnion, EmptyConditionedUnion):
        return None
    return i, v_nj, v_njp, v_njp - v_nj


def _cmd_simulate(args) -> str:
    params = _gen_params(args)
    raw = _pmap(functools.partial(_sim_one, params, args.seed),
                args.realizations, args.workers)
    rows = [r for r in raw if r is not None]
    skipped = args.realizations - len(rows)
    njs = [r[1] for r in rows]
    njps = [r[2] for r in rows]
    deltas = [r[3] for r in rows]
    config = {"command": "simulate", "model": args.model,
              "n_nodes": args.nodes, "p": args.p, "q": args.q,
              "mu": args.mu, "realizations": args.realizations,
              "seed": args.seed, "bins": args.bins, "format": args.format}
    results = {
        "skipped": skipped,
        "realizations": [
            {"realization": i, "nj": a, "nj_partial": b, "delta": d}
            for i, a, b, d in rows],
        "summary": {"nj": _summary_dict(njs),
                    "nj_partial": _summary_dict(njps),
                    "delta": _summary_dict(deltas)},
        "delta_histogram": _histogram_dict(deltas, args.bins),
    }
    if args.format == "json":
        return _emit_json("simulate", config, results)
    hist = results["delta_histogram"]
    sections = [
        ("realizations", ["realization", "nj", "nj_partial", "delta"], rows),
        ("summary", ["metric", "n", "mean", "std", "min", "max"],
         [[m] + [results["summary"][m][k]
                 for k in ("n", "mean", "std", "min", "max")]
          for m in ("nj", "nj_partial", "delta")]),
        ("delta_histogram", ["bin_left", "bin_right", "count"],
         [[hist["bin_edges"][k], hist["bin_edges"][k + 1],
           hist["counts"][k]] for k in range(len(hist["counts"]))]),
        ("skipped", ["skipped"], [[skipped]]),
    ]
    return _emit_csv("simulate", config, sections)


# ---------------------------------------------------------------- sweep-mu

def _sweep_one(params, seed, ip, imu, rewire_curves, r):
    t = generate(params, child_seed(seed, ip, imu, r, 0))
    try:
        d0 = delta(t.a, t.b, t.c)
        if not rewire_curves:
            return (d0,)
        d_s = delta(t.a, selective_rewire(t.a, t.b, t.c, "S",
                                          child_seed(seed, ip, imu, r, 1)),
                    t.c)
        d_m = delta(t.a, selective_rewire(t.a, t.b, t.c, "M",
                                          child_seed(seed, ip, imu, r, 2)),
                    t.c)
        b2 = full_rewire(t.b, child_seed(seed, ip, imu, r, 3))
        d_r = delta(t.a, b2, t.c)
        d_rs = delta(t.a, selective_rewire(t.a, b2, t.c, "S",
                                           child_seed(seed, ip, imu, r, 4)),
                     t.c)
        d_rm = delta(t.a, selective_rewire(t.a, b2, t.c, "M",
                                           child_seed(seed, ip, imu, r, 5)),
                     t.c)
        return d0, d_s, d_m, d_r, d_rs, d_rm
    except (EmptyUnion, EmptyConditionedUnion):
        return None


def _parse_p_values(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise ConfigError(f"bad --p-values {text!r}") from None


def _parse_mu_grid(text: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ConfigError(f"--mu-grid wants 'start,stop,count', got {text!r}")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"bad --mu-grid {text!r}") from None
    if count < 2 or not 0 <= start < stop <= 1:
        raise ConfigError(f"--mu-grid needs 0 <= start < stop <= 1 and "
                          f"count >= 2, got {text!r}")
    step = (stop - start) / (count - 1)
    return [start + k * step for k in range(count)]


def _cmd_sweep_mu(args) -> str:
    p_values = _parse_p_values(args.p_values)
    mu_grid = _parse_mu_grid(args.mu_grid)
    curve_cols = ["delta_s", "delta_m", "delta_r", "delta_rs", "delta_rm"]
    points = []
    for ip, p in enumerate(p_values):
        for imu, mu in enumerate(mu_grid):
            params = GenParams(n_nodes=args.nodes, p=p, q=args.q, mu=mu,
                               model="interpolated")
            raw = _pmap(functools.partial(_sweep_one, params, args.seed,
                                          ip, imu, args.rewire_curves),
                        args.realizations, args.workers)
            kept = [r for r in raw if r is not None]
            point = {"p": p, "mu": mu,
                     "n": len(kept),
                     "skipped": args.realizations - len(kept),
                     "delta": _summary_dict([r[0] for r in kept])}
            if args.rewire_curves:
                for col, k in zip(curve_cols, range(1, 6)):
                    point[col] = _summary_dict([r[k] for r in kept])
            points.append(point)
    config = {"command": "sweep-mu", "n_nodes": args.nodes,
              "p_values": p_values, "q": args.q, "mu_grid": mu_grid,
              "realizations": args.realizations, "seed": args.seed,
              "rewire_curves": args.rewire_curves, "format": args.format}
    if args.format == "json":
        return _emit_json("sweep-mu", config, {"points": points})
    metrics = ["delta"] + (curve_cols if args.rewire_curves else [])
    header = ["p", "mu", "n", "skipped"]
    for m in metrics:
        header += [f"mean_{m}", f"std_{m}"]
    rows = []
    for pt in points:
        row = [pt["p"], pt["mu"], pt["n"], pt["skipped"]]
        for m in metrics:
            row += [pt[m]["mean"], pt[m]["std"]]
        rows.append(row)
    return _emit_csv("sweep-mu", config, [("grid", header, rows)])


# ------------------------------------------------------------ pairwise-null

def _pair_one(ds, pairs, n, seed, degree_preserving, k):
    name_a, name_b = pairs[k]
    summary = pairwise_null(binarize_layer(ds, name_a),
                            binarize_layer(ds, name_b),
                            n=n, seed=derive_int_seed(seed, k),
                            degree_preserving=degree_preserving)
    return {"layer_a": name_a, "layer_b": name_b,
            "observed_nj": summary.observed_nj,
            "null_mean": summary.null_mean,
            "null_std": summary.null_std,
            "n_randomizations": summary.n_randomizations,
            "skipped": summary.skipped}


def _cmd_pairwise_null(args) -> str:
    ds = _load_dataset(args.input)
    pairs = list(itertools.combinations(ds.layer_names, 2))
    records = _pmap(functools.partial(_pair_one, ds, pairs,
                                      args.realizations, args.seed,
                                      args.degree_preserving_null),
                    len(pairs), args.workers)
    config = {"command": "pairwise-null", "input": args.input,
              "realizations": args.realizations, "seed": args.seed,
              "degree_preserving_null": args.degree_preserving_null,
              "format": args.format}
    if args.format == "json":
        return _emit_json("pairwise-null", config, {"pairs": records})
    header = ["layer_a", "layer_b", "observed_nj", "null_mean", "null_std",
              "n_randomizations", "skipped"]
    rows = [[rec[h] for h in header] for rec in records]
    return _emit_csv("pairwise-null", config, [("pairs", header, rows)])


# ----------------------------------------------------------------- triad

def _report_dict(labels, report) -> dict:
    return {
        "a": labels[0], "b": labels[1], "c": labels[2],
        "delta0": report.delta0,
        "m_bar": report.m_bar, "s_bar": report.s_bar,
        "sigma_s": report.sigma_s, "sigma_m": report.sigma_m,
        "m_max": report.m_max, "s_max": report.s_max,
        "mean_delta_s": summarize(report.delta_s).mean,
        "mean_delta_m": summarize(report.delta_m).mean,
        "mean_delta_rs": summarize(report.delta_rs).mean,
        "mean_delta_rm": summarize(report.delta_rm).mean,
        "skipped": report.skipped,
        "flags": list(report.flags),
        "ensembles": {"delta_s": list(report.delta_s),
                      "delta_m": list(report.delta_m),
                      "delta_rs": list(report.delta_rs),
                      "delta_rm": list(report.delta_rm)},
    }


_TRIAD_SUMMARY_COLS = ["a", "b", "c", "delta0", "m_bar", "s_bar",
                       "sigma_s", "sigma_m", "m_max", "s_max",
                       "mean_delta_s", "mean_delta_m", "mean_delta_rs",
                       "mean_delta_rm", "skipped", "flags"]


def _triad_sections(records):
    rows = []
    for rec in records:
        row = [rec[c] if c != "flags" else ";".join(rec["flags"])
               for c in _TRIAD_SUMMARY_COLS]
        rows.append(row)
    sections = [("assignments", _TRIAD_SUMMARY_COLS, rows)]
    for k, rec in enumerate(records):
        ens = rec["ensembles"]
        table = [[r, ens["delta_s"][r], ens["delta_m"][r],
                  ens["delta_rs"][r], ens["delta_rm"][r]]
                 for r in range(len(ens["delta_s"]))]
        sections.append((f"ensembles_{k}",
                         ["realization", "delta_s", "delta_m",
                          "delta_rs", "delta_rm"], table))
    return sections


def _role_rotations(a, b, c, labels):
    """Cyclic role assignments: each layer takes the conditioning role
    once, the other two keeping their relative order."""
    return [((a, b, c), labels),
            ((b, c, a), (labels[1], labels[2], labels[0])),
            ((c, a, b), (labels[2], labels[0], labels[1]))]


def _cmd_triad(args) -> str:
    if args.input is not None:
        if args.layers is None:
            raise ConfigError("--layers is required with --input")
        ds = _load_dataset(args.input)
        from .ingest import extract_triplet
        base = extract_triplet(ds, args.layers)
        source = {"input": args.input, "layers": list(args.layers)}
    else:
        if args.model is None:
            raise ConfigError("need either --input or --model")
        params = _gen_params(args)
        base = generate(params, child_seed(args.seed, 0))
        source = {"model": args.model, "n_nodes": args.nodes, "p": args.p,
                  "q": args.q, "mu": args.mu}
    rotations = _role_rotations(base.a, base.b, base.c, base.labels)
    if args.c_only:
        rotations = rotations[:1]
    records = []
    for k, ((ea, eb, ec), labels) in enumerate(rotations):
        report = triad_indices(ea, eb, ec, n_realizations=args.realizations,
                               seed=derive_int_seed(args.seed, 1 + k),
                               one_sided=args.one_sided_xor,
                               max_surrogates=args.max_surrogates,
                               workers=args.workers)
        records.append(_report_dict(labels, report))
    config = {"command": "triad", "realizations": args.realizations,
              "seed": args.seed, "one_sided_xor": args.one_sided_xor,
              "max_surrogates": args.max_surrogates,
              "c_only": args.c_only, "format": args.format, **source}
    if args.format == "json":
        return _emit_json("triad", config, {"assignments": records})
    return _emit_csv("triad", config, _triad_sections(records))


# -------------------------------------------------------------- rssi-sweep

def _cmd_rssi_sweep(args) -> str:
    ds = _load_dataset(args.input)
    windows = weight_windows(ds, args.window_layer, args.windows)
    layer_weights = ds.layers[args.window_layer]
    a = binarize_layer(ds, args.a)
    b = binarize_layer(ds, args.b)
    records = []
    for w, window in enumerate(windows):
        weights = [layer_weights[p] for p in window.pairs]
        report = triad_indices(a, b, window,
                               n_realizations=args.realizations,
                               seed=derive_int_seed(args.seed, w),
                               one_sided=args.one_sided_xor,
                               max_surrogates=args.max_surrogates,
                               workers=args.workers)
        records.append({
            "window": w, "n_edges": len(window),
            "weight_min": min(weights), "weight_max": max(weights),
            "delta0": report.delta0,
            "m_bar": report.m_bar, "s_bar": report.s_bar,
            "m_plus_s": report.m_bar + report.s_bar,
            "sigma_s": report.sigma_s, "sigma_m": report.sigma_m,
            "skipped": report.skipped, "flags": list(report.flags)})
    config = {"command": "rssi-sweep", "input": args.input,
              "window_layer": args.window_layer, "a": args.a, "b": args.b,
              "windows": args.windows, "realizations": args.realizations,
              "seed": args.seed, "one_sided_xor": args.one_sided_xor,
              "max_surrogates": args.max_surrogates, "format": args.format}
    if args.format == "json":
        return _emit_json("rssi-sweep", config, {"windows": records})
    header = ["window", "n_edges", "weight_min", "weight_max", "delta0",
              "m_bar", "s_bar", "m_plus_s", "sigma_s", "sigma_m",
              "skipped", "flags"]
    rows = [[rec[h] if h != "flags" else ";".join(rec["flags"])
             for h in header] for rec in records]
    return _emit_csv("rssi-sweep", config, [("windows", header, rows)])


# ----------------------------------------------------------------- parser

def _add_common(sub, realizations_default=500):
    sub.add_argument("--seed", type=int, required=True,
                     help="master seed; all randomness derives from it")
    sub.add_argument("--realizations", type=int,
                     default=realizations_default)
    sub.add_argument("--workers", type=int, default=1,
                     help="worker processes; never changes results")
    sub.add_argument("--output", default=None,
                     help="artifact path (default: stdout)")
    sub.add_argument("--format", choices=("csv", "json"), default="json")


def _add_model(sub, required=True):
    sub.add_argument("--model", choices=MODELS, required=required,
                     default=None if required else None)
    sub.add_argument("-N", "--nodes", type=int, default=50)
    sub.add_argument("-p", type=float, default=0.5)
    sub.add_argument("-q", type=float, default=1.0)
    sub.add_argument("--mu", type=float, default=0.0)


def _add_triad_opts(sub):
    sub.add_argument("--one-sided-xor", action="store_true",
                     help="restrict suppression removal to edges in A "
                          "but not C")
    sub.add_argument("--max-surrogates", type=int, default=20)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netriad",
        description="Mediation and suppression analysis for triplets of "
                    "networks via conditional edge-overlap measures.")
    parser.add_argument("--version", action="version",
                        version=f"netriad {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    sim = commands.add_parser("simulate",
                              help="ensemble of one generative model")
    _add_model(sim)
    sim.add_argument("--bins", type=int, default=30)
    _add_common(sim)

    sweep = commands.add_parser("sweep-mu",
                                help="interpolation grid of mean delta")
    sweep.add_argument("-N", "--nodes", type=int, default=300)
    sweep.add_argument("--p-values", default="0.3,0.5",
                       help="comma-separated edge probabilities")
    sweep.add_argument("-q", type=float, default=1.0)
    sweep.add_argument("--mu-grid", default="0,1,11",
                       help="start,stop,count")
    sweep.add_argument("--rewire-curves", action="store_true",
                       help="add selective-rewiring curves per grid point")
    _add_common(sweep, realizations_default=50)

    pw = commands.add_parser("pairwise-null",
                             help="observed vs randomized layer overlap")
    pw.add_argument("--input", required=True)
    pw.add_argument("--degree-preserving-null", action="store_true")
    _add_common(pw)

    tri = commands.add_parser("triad", help="full rewiring analysis")
    tri.add_argument("--input", default=None)
    tri.add_argument("--layers", nargs=3, default=None,
                     metavar=("A", "B", "C"))
    _add_model(tri, required=False)
    tri.add_argument("--c-only", action="store_true",
                     help="analyze only the given role assignment")
    _add_triad_opts(tri)
    _add_common(tri)

    rssi = commands.add_parser("rssi-sweep",
                               help="triad indices per weight window")
    rssi.add_argument("--input", required=True)
    rssi.add_argument("--window-layer", required=True)
    rssi.add_argument("--a", required=True, help="layer taking role A")
    rssi.add_argument("--b", required=True, help="layer taking role B")
    rssi.add_argument("-k", "--windows", type=int, default=7)
    _add_triad_opts(rssi)
    _add_common(rssi)

    return parser


_COMMANDS = {
    "simulate": _cmd_simulate,
    "sweep-mu": _cmd_sweep_mu,
    "pairwise-null": _cmd_pairwise_null,
    "triad": _cmd_triad,
    "rssi-sweep": _cmd_rssi_sweep,
}


def _fail(exc: Exception, code: int) -> int:
    record = {"error": type(exc).__name__, "message": str(exc),
              "exit_code": code}
    sys.stderr.write(json.dumps(record, sort_keys=True) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        text = _COMMANDS[args.command](args)
        if args.output is None:
            sys.stdout.write(text)
        else:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
    except ConfigError as exc:
        return _fail(exc, 2)
    except DataError as exc:
        return _fail(exc, 3)
    except DegenerateMathError as exc:
        return _fail(exc, 4)
    except OSError as exc:
        return _fail(exc, 3)
    return 0


if __name__ == "__main__":
    sys.exit(main())
