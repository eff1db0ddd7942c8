"""Command-line harness: instance generation, verdict campaigns, proof-step
audits, radius studies, sharpness tables, relaxation searches, and report
aggregation.

Every run is deterministic in its effective config: identical flags, config
file, and seed produce byte-identical output files. Wall time goes to
stderr so it never perturbs the artifacts.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

import numpy as np

from . import __version__
from .checks import (
    DEFAULT_BOHR_TOL,
    ProofStep,
    build_radius_report,
    check_bb2_norm_bound,
    check_bohr,
    check_cor2,
    check_thm2_bounds,
    counterexample_search,
    default_z_samples,
    proof_step_validate,
    sharpness_scan,
    thm1_admissible_radius,
)
from .errors import BohrlabError, HypothesisViolated, StepClassMismatch
from .fileio import (
    KIND_TO_CLASS,
    FunctionFile,
    canonical_dumps,
    load_function_file,
    proof_report_to_json,
    radius_report_to_json,
    read_text,
    save_function_file,
    search_result_to_json,
    series_to_json,
    sharpness_rows_to_csv,
    verdict_rows_to_csv,
    verdict_to_json,
    write_text,
)
from .functions import (
    generate_thm1_instance,
    generate_thm2_instance,
    generate_transfer_instance,
    hypothesis_check,
    mobius_witness,
)
from .linalg import abs_operator, identity, loewner_leq

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATED = 2
EXIT_INCONCLUSIVE = 3
EXIT_WITNESS = 4

THEOREMS = ("thm1", "cor1", "cor2", "thm2", "bb2remark")

# steps grouped by the statement they support, and which knob they take
STEP_FAMILY = {
    ProofStep.EQ5: "thm1",
    ProofStep.EQ9: "thm1",
    ProofStep.EQ10: "thm1",
    ProofStep.EQ11: "thm1",
    ProofStep.EQ12: "thm1",
    ProofStep.EQ14: "thm1",
    ProofStep.EQ1: "thm2",
    ProofStep.EQ2: "thm2",
    ProofStep.THM2_FINAL: "thm2",
    ProofStep.BB2_REMARK: "norm",
}
CLASS_STEP_FAMILIES = {
    "thm1": ("thm1", "norm"),
    "thm2": ("thm2",),
    "transfer": ("norm",),
    "polynomial": ("thm1", "thm2", "norm"),
}
DEFAULT_STEPS = {
    "thm1": ("eq5", "eq9", "eq10", "eq11", "eq12", "eq14"),
    "thm2": ("eq1", "eq2", "thm2final"),
    "transfer": ("bb2remark",),
    "polynomial": ("bb2remark",),
}
R_STEPS = (ProofStep.EQ11, ProofStep.EQ12, ProofStep.EQ2, ProofStep.THM2_FINAL, ProofStep.BB2_REMARK)


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

CONFIG_DEFAULTS = {
    "class": "thm1",
    "dims": [4],
    "count": 10,
    "seed": None,
    "radii": None,
    "steps": None,
    "tol": None,
    "k": None,
    "samples": 64,
    "budget": 100,
    "relax": None,
    "output_dir": ".",
    "format": None,
    "delta": 1e-3,
    "grid": None,
    "pin_lambda": None,
    "pin_degree": 1,
    "state_dim": 4,
}
CONFIG_ALIASES = {"seeds": "seed", "tolerances": "tol"}


def _load_config_file(path: str) -> dict:
    raw = json.loads(read_text(path))
    if not isinstance(raw, dict):
        raise ValueError("config file must hold a JSON object")
    out = {}
    for key, value in raw.items():
        key = CONFIG_ALIASES.get(key, key)
        if key not in CONFIG_DEFAULTS:
            raise ValueError(f"unknown config key {key!r}")
        out[key] = value
    return out


def effective_config(args) -> dict:
    """Defaults, overlaid by the config file, overlaid by CLI flags."""
    cfg = dict(CONFIG_DEFAULTS)
    if getattr(args, "config", None):
        cfg.update(_load_config_file(args.config))
    flags = {
        "class": getattr(args, "klass", None),
        "dims": getattr(args, "dim", None),
        "count": getattr(args, "count", None),
        "seed": getattr(args, "seed", None),
        "radii": getattr(args, "r", None),
        "steps": getattr(args, "steps", None),
        "tol": getattr(args, "tol", None),
        "k": getattr(args, "k", None),
        "budget": getattr(args, "budget", None),
        "relax": getattr(args, "relax", None),
        "output_dir": getattr(args, "out", None),
        "format": getattr(args, "format", None),
        "grid": getattr(args, "grid", None),
    }
    for key, value in flags.items():
        if value is not None:
            cfg[key] = value
    if cfg["seed"] is None:
        env = os.environ.get("BOHRLAB_SEED")
        cfg["seed"] = int(env) if env else 0
    if isinstance(cfg["steps"], str):
        cfg["steps"] = [s for s in cfg["steps"].split(",") if s]

    cfg["count"] = int(cfg["count"])
    cfg["seed"] = int(cfg["seed"])
    cfg["budget"] = int(cfg["budget"])
    cfg["samples"] = int(cfg["samples"])
    cfg["dims"] = [int(d) for d in cfg["dims"]]
    if cfg["radii"] is not None:
        cfg["radii"] = [float(r) for r in cfg["radii"]]
    if cfg["count"] < 1:
        raise ValueError("count must be >= 1")
    if cfg["budget"] < 1:
        raise ValueError("budget must be >= 1")
    if cfg["samples"] < 1:
        raise ValueError("samples must be >= 1")
    if any(d < 1 for d in cfg["dims"]):
        raise ValueError("dims must all be >= 1")
    if cfg["radii"] is not None and any(not 0.0 <= r < 1.0 for r in cfg["radii"]):
        raise ValueError("radii must lie in [0, 1)")
    return cfg


def _config_hash(command: str, cfg: dict) -> str:
    return hashlib.sha256(
        canonical_dumps({"command": command, **cfg}).encode()
    ).hexdigest()


# ---------------------------------------------------------------------------
# run records
# ---------------------------------------------------------------------------

def _summarize(entries) -> dict:
    counts = {"holds": 0, "violated": 0, "inconclusive": 0}
    for entry in entries:
        counts[entry["status"]] += 1
    return counts


def _exit_for(summary: dict) -> int:
    if summary["violated"]:
        return EXIT_VIOLATED
    if summary["inconclusive"]:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _record(command: str, argv, cfg_hash: str, entries, summary, extra=None) -> dict:
    rec = {
        "command": command,
        "command_line": " ".join(["bohrlab"] + list(argv)),
        "config_hash": cfg_hash,
        "tool_version": __version__,
        "verdicts": entries,
        "summary": summary,
    }
    if extra:
        rec.update(extra)
    return rec


def _emit(text: str, out: str | None) -> None:
    if out:
        write_text(out, text)
        print(f"wrote {out}")
    else:
        sys.stdout.write(text)


def _load_files(paths):
    return [(os.path.basename(p), load_function_file(p)) for p in paths]


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def cmd_gen(args, argv) -> int:
    cfg = effective_config(args)
    klass = cfg["class"]
    if klass not in ("thm1", "thm2", "transfer"):
        raise ValueError(f"gen supports classes thm1/thm2/transfer, not {klass!r}")
    out_dir = cfg["output_dir"]
    os.makedirs(out_dir, exist_ok=True)
    dims = cfg["dims"]
    for i in range(cfg["count"]):
        dim = dims[i % len(dims)]
        seed_i = cfg["seed"] + i
        report = None
        if klass == "thm1":
            if cfg["pin_lambda"] is not None:
                f = mobius_witness(float(cfg["pin_lambda"]), int(cfg["pin_degree"]))
            else:
                f = generate_thm1_instance(dim, seed=seed_i)
            report = hypothesis_check(f, "thm1").to_dict()
        elif klass == "thm2":
            f = generate_thm2_instance(dim, seed_i)
            report = hypothesis_check(f, "thm2").to_dict()
        else:
            f = generate_transfer_instance(dim, int(cfg["state_dim"]), seed_i)
        path = os.path.join(out_dir, f"{klass}_{i:04d}.json")
        save_function_file(path, FunctionFile(f, klass, seed_i, report))
        print(path)
    return EXIT_OK


# ---------------------------------------------------------------------------
# coeffs
# ---------------------------------------------------------------------------

def cmd_coeffs(args, argv) -> int:
    cfg = effective_config(args)
    order = int(cfg["k"]) if cfg["k"] is not None else 32
    items = []
    for name, ff in _load_files(args.files):
        series = ff.function.coefficients(order)
        items.append({"file": name, "class": ff.klass, "series": series_to_json(series)})
    record = {
        "command": "coeffs",
        "config_hash": _config_hash("coeffs", cfg),
        "tool_version": __version__,
        "items": items,
    }
    _emit(canonical_dumps(record), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _gate_verify(theorem: str, name: str, ff: FunctionFile) -> None:
    kind = ff.function.kind
    if theorem != "thm2" and kind == "halfplane":
        raise HypothesisViolated(
            f"{name}: {theorem} needs a norm-bounded instance; the "
            "real-part class certifies no norm bound"
        )
    if theorem in ("thm1", "cor1") and ff.klass == "thm1" and kind != "mobius":
        report = hypothesis_check(ff.function, "thm1")
        if not report.passed:
            raise HypothesisViolated(
                f"{name}: thm1 hypotheses fail: " + ", ".join(report.failures())
            )


def _default_radii(theorem: str, ff: FunctionFile) -> list[float]:
    if theorem == "thm1":
        try:
            guaranteed = thm1_admissible_radius(ff.function.coefficient0())
        except BohrlabError as exc:
            raise HypothesisViolated(
                f"no default radius for this instance ({exc}); pass --r"
            ) from exc
        return [max(0.0, guaranteed.value - 1e-6)]
    if theorem == "cor1":
        return [1.0 / 3.0]
    if theorem == "thm2":
        return [1.0 / 3.0]
    return [0.5]


def cmd_verify(args, argv) -> int:
    cfg = effective_config(args)
    theorem = args.theorem
    tol = float(cfg["tol"]) if cfg["tol"] is not None else DEFAULT_BOHR_TOL
    entries = []
    for name, ff in _load_files(args.files):
        _gate_verify(theorem, name, ff)
        radii = cfg["radii"] if cfg["radii"] is not None else _default_radii(theorem, ff)
        for r in radii:
            r = float(r)
            entry = {"instance_id": name, "class": ff.klass, "dim": ff.function.dim}
            if theorem in ("thm1", "cor1"):
                entry.update(verdict_to_json(check_bohr(ff.function, r, tol)))
            elif theorem == "cor2":
                entry.update(verdict_to_json(check_cor2(ff.function, r, tol)))
            elif theorem == "bb2remark":
                entry.update(verdict_to_json(check_bb2_norm_bound(ff.function, r, tol)))
            else:
                bounds = check_thm2_bounds(ff.function, r, tol)
                parts = [
                    verdict_to_json(bounds.bohr),
                    proof_report_to_json(bounds.eq2),
                    proof_report_to_json(bounds.final),
                ]
                entry.update(parts[0])
                statuses = [p["status"] for p in parts]
                for worst in ("violated", "inconclusive"):
                    if worst in statuses:
                        entry["status"] = worst
                        break
                entry["parts"] = parts
            entries.append(entry)
    summary = _summarize(entries)
    record = _record(
        "verify", argv, _config_hash("verify", cfg), entries, summary,
        extra={"theorem": theorem},
    )
    _emit(canonical_dumps(record), args.out)
    if args.out:
        print(
            f"holds={summary['holds']} violated={summary['violated']} "
            f"inconclusive={summary['inconclusive']}"
        )
    return _exit_for(summary)


# ---------------------------------------------------------------------------
# proofcheck
# ---------------------------------------------------------------------------

def cmd_proofcheck(args, argv) -> int:
    cfg = effective_config(args)
    k = int(cfg["k"]) if cfg["k"] is not None else 20
    radii = cfg["radii"] if cfg["radii"] is not None else [0.5]
    samples = default_z_samples(cfg["samples"])
    entries = []
    skipped = 0
    for name, ff in _load_files(args.files):
        tokens = cfg["steps"] if cfg["steps"] is not None else DEFAULT_STEPS[ff.klass]
        steps = [ProofStep(t) for t in tokens]
        for step in steps:
            if STEP_FAMILY[step] not in CLASS_STEP_FAMILIES[ff.klass]:
                raise StepClassMismatch(
                    f"{name}: step {step.value} does not apply to class {ff.klass}"
                )
        f = ff.function
        for step in steps:
            step_radii = radii if step in R_STEPS else [None]
            for r in step_radii:
                if step is ProofStep.EQ11:
                    absA0 = abs_operator(f.coefficient0())
                    if not loewner_leq(float(r) * identity(f.dim), absA0).holds:
                        skipped += 1
                        continue
                rep = proof_step_validate(
                    f, step, k=k, r=0.5 if r is None else float(r), z_samples=samples
                )
                entry = {"instance_id": name, "class": ff.klass, "dim": f.dim}
                entry.update(proof_report_to_json(rep))
                entry["location"] = str(rep.location)
                entries.append(entry)
    summary = _summarize(entries)
    record = _record(
        "proofcheck", argv, _config_hash("proofcheck", cfg), entries, summary,
        extra={"skipped": skipped},
    )
    _emit(canonical_dumps(record), args.out)
    if args.out:
        print(
            f"holds={summary['holds']} violated={summary['violated']} "
            f"inconclusive={summary['inconclusive']} skipped={skipped}"
        )
    return _exit_for(summary)


# ---------------------------------------------------------------------------
# radius
# ---------------------------------------------------------------------------

def cmd_radius(args, argv) -> int:
    cfg = effective_config(args)
    tol = float(cfg["tol"]) if cfg["tol"] is not None else 1e-6
    if tol < 1e-6:
        raise ValueError("radius tol must be >= 1e-6")
    entries = []
    for name, ff in _load_files(args.files):
        f = ff.function
        if f.kind == "halfplane":
            raise HypothesisViolated(
                f"{name}: radius formulas need the norm-bounded commuting class"
            )
        if f.kind != "mobius":
            report = hypothesis_check(f, "thm1")
            if not report.passed:
                raise HypothesisViolated(
                    f"{name}: thm1 hypotheses fail: " + ", ".join(report.failures())
                )
        rep = build_radius_report(f, tol)
        entry = {
            "instance_id": name,
            "class": ff.klass,
            "dim": f.dim,
            "status": "holds" if rep.margin >= -tol else "violated",
            "r": rep.empirical_radius,
            "lhs_extreme": -rep.margin,
            "truncation_gap": 0.0,
            "N_used": 0,
            "witness": None,
            "step": None,
        }
        entry.update(radius_report_to_json(rep))
        entries.append(entry)
    summary = _summarize(entries)
    record = _record("radius", argv, _config_hash("radius", cfg), entries, summary)
    _emit(canonical_dumps(record), args.out)
    # a violated row means guaranteed > empirical + tol: an implementation bug
    return EXIT_VIOLATED if summary["violated"] else EXIT_OK


# ---------------------------------------------------------------------------
# sharpness
# ---------------------------------------------------------------------------

def _parse_grid(spec: str) -> list[float]:
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError("grid spec must be start:stop:count or a comma list")
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 1:
            raise ValueError("grid count must be >= 1")
        return [float(x) for x in np.linspace(start, stop, count)]
    return [float(x) for x in spec.split(",") if x]


def cmd_sharpness(args, argv) -> int:
    cfg = effective_config(args)
    spec = cfg["grid"]
    if not spec:
        raise ValueError("sharpness needs a grid spec (start:stop:count or comma list)")
    grid = _parse_grid(spec) if isinstance(spec, str) else [float(x) for x in spec]
    rows = sharpness_scan(grid, float(cfg["delta"]))
    _emit(sharpness_rows_to_csv(rows), args.out)
    return EXIT_OK if all(row.confirmed for row in rows) else EXIT_VIOLATED


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def cmd_search(args, argv) -> int:
    cfg = effective_config(args)
    relax = cfg["relax"]
    if not relax:
        raise ValueError("search needs --relax "
                         "(drop-commutation | drop-normality | weak-norm-bound)")
    dim = cfg["dims"][0]
    result = counterexample_search(relax, dim, cfg["budget"], cfg["seed"])
    out_dir = cfg["output_dir"]
    os.makedirs(out_dir, exist_ok=True)
    stem = f"search_{relax}_d{dim}_s{cfg['seed']}"
    entries = []
    extra = {"search": search_result_to_json(result), "witness_path": None}
    witness_path = None
    if result.witness is not None:
        w = result.witness
        witness_path = os.path.join(out_dir, f"witness_{relax}_d{dim}_s{cfg['seed']}.json")
        save_function_file(
            witness_path,
            FunctionFile(w.function, KIND_TO_CLASS[w.function.kind], cfg["seed"], None),
        )
        entry = {
            "instance_id": os.path.basename(witness_path),
            "class": KIND_TO_CLASS[w.function.kind],
            "dim": w.function.dim,
        }
        entry.update(verdict_to_json(w.verdict))
        entries.append(entry)
        extra["witness_path"] = os.path.basename(witness_path)
    summary = _summarize(entries)
    record = _record("search", argv, _config_hash("search", cfg), entries, summary, extra)
    write_text(os.path.join(out_dir, f"{stem}.json"), canonical_dumps(record))
    if witness_path is None:
        print("none")
        return EXIT_OK
    print(witness_path)
    return EXIT_WITNESS


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

def _aggregate(paths) -> dict:
    records = []
    for path in paths:
        rec = json.loads(read_text(path))
        if "verdicts" not in rec or "summary" not in rec:
            raise ValueError(f"{path}: not a run record (missing verdicts/summary)")
        records.append((os.path.basename(path), rec))
    totals = {"holds": 0, "violated": 0, "inconclusive": 0}
    rows = []
    margins = []
    reproduce = []
    for name, rec in records:
        for key in totals:
            totals[key] += int(rec["summary"].get(key, 0))
        line = rec.get("command_line")
        if line:
            reproduce.append(line)
        for e in rec["verdicts"]:
            margin = -float(e["lhs_extreme"])
            rows.append(
                (e["instance_id"], e["class"], e["dim"], e["r"], e["status"], margin)
            )
            margins.append(margin)
    if margins:
        counts, edges = np.histogram(np.array(margins), bins=10)
        histogram = {
            "edges": [float(x) for x in edges],
            "counts": [int(c) for c in counts],
        }
    else:
        histogram = {"edges": [], "counts": []}
    return {
        "files": [name for name, _ in records],
        "summary": totals,
        "histogram": histogram,
        "reproduce": reproduce,
        "rows": rows,
    }


def _report_md(agg: dict) -> str:
    lines = ["# verdict report", ""]
    lines.append("| holds | violated | inconclusive |")
    lines.append("| --- | --- | --- |")
    s = agg["summary"]
    lines.append(f"| {s['holds']} | {s['violated']} | {s['inconclusive']} |")
    lines.append("")
    lines.append("## margin histogram")
    lines.append("")
    lines.append("| bin_lo | bin_hi | count |")
    lines.append("| --- | --- | --- |")
    edges, counts = agg["histogram"]["edges"], agg["histogram"]["counts"]
    for i, c in enumerate(counts):
        lines.append(f"| {edges[i]!r} | {edges[i + 1]!r} | {c} |")
    lines.append("")
    lines.append("## reproduce")
    lines.append("")
    for line in agg["reproduce"]:
        lines.append(f"    {line}")
    lines.append("")
    return "\n".join(lines)


def cmd_report(args, argv) -> int:
    cfg = effective_config(args)
    fmt = cfg["format"] or "md"
    if fmt not in ("csv", "md", "json"):
        raise ValueError("format must be csv, md, or json")
    agg = _aggregate(args.files)
    if fmt == "csv":
        text = verdict_rows_to_csv(agg["rows"])
    elif fmt == "json":
        body = {key: agg[key] for key in ("files", "summary", "histogram", "reproduce")}
        body["tool_version"] = __version__
        body["config_hash"] = _config_hash("report", cfg)
        text = canonical_dumps(body)
    else:
        text = _report_md(agg)
    _emit(text, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser and entry point
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # config errors must exit 1; argparse defaults to 2, which means Violated here
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _add_common(sub):
    sub.add_argument("--config", help="JSON config file; flags override its values")
    sub.add_argument("--out", help="output path (directory for gen/search)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bohrlab", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gen", help="write function instance files")
    p.add_argument("--class", dest="klass", choices=("thm1", "thm2", "transfer"))
    p.add_argument("--dim", type=int, action="append")
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    _add_common(p)
    p.set_defaults(handler=cmd_gen)

    p = subs.add_parser("coeffs", help="dump coefficient series JSON")
    p.add_argument("files", nargs="+")
    p.add_argument("--k", type=int, help="series order (default 32)")
    _add_common(p)
    p.set_defaults(handler=cmd_coeffs)

    p = subs.add_parser("verify", help="run a verdict campaign")
    p.add_argument("files", nargs="+")
    p.add_argument("--theorem", choices=THEOREMS, default="thm1")
    p.add_argument("--r", type=float, action="append")
    p.add_argument("--tol", type=float)
    _add_common(p)
    p.set_defaults(handler=cmd_verify)

    p = subs.add_parser("proofcheck", help="audit derivation steps")
    p.add_argument("files", nargs="+")
    p.add_argument("--steps", help="comma list of step names")
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=float, action="append")
    _add_common(p)
    p.set_defaults(handler=cmd_proofcheck)

    p = subs.add_parser("radius", help="guaranteed vs empirical radius")
    p.add_argument("files", nargs="+")
    p.add_argument("--tol", type=float)
    _add_common(p)
    p.set_defaults(handler=cmd_radius)

    p = subs.add_parser("sharpness", help="scalar witness sharpness table")
    p.add_argument("grid", nargs="?", help="start:stop:count or comma list")
    _add_common(p)
    p.set_defaults(handler=cmd_sharpness)

    p = subs.add_parser("search", help="hunt for violations under a relaxed hypothesis")
    p.add_argument("--relax", choices=("drop-commutation", "drop-normality", "weak-norm-bound"))
    p.add_argument("--dim", type=int, action="append")
    p.add_argument("--budget", type=int)
    p.add_argument("--seed", type=int)
    _add_common(p)
    p.set_defaults(handler=cmd_search)

    p = subs.add_parser("report", help="aggregate run records")
    p.add_argument("files", nargs="+")
    p.add_argument("--format", choices=("csv", "md", "json"))
    _add_common(p)
    p.set_defaults(handler=cmd_report)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or EXIT_OK)
    start = time.perf_counter()
    try:
        return args.handler(args, argv)
    except BohrlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        print(f"wall_time_s {time.perf_counter() - start:.3f}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
