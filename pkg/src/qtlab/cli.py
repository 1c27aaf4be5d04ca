"""
Galois group and monogenicity checks for quartic trinomials.

    qtlab classify --c 5 --d 5
    qtlab sweep --family linear --cmax 300 --dmax 300 --workers 4
    qtlab verify --suite identities --bound 100
    qtlab ec --k 5 --xbound 2000
    qtlab report

Exit status: 0 success, 1 failed check (counterexample on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from .arith import FactorBudget
from .ec import ec_expected_points, ec_point_to_coefficients, ec_points_bruteforce
from .galois import frobenius_pattern_sample
from .report import classify_trinomial
from .search import (
    VerificationFailure,
    default_workers,
    jks_dedekind_agreement,
    parity_observations_check,
    sweep,
    verify_identities,
    verify_mod9_table,
)
from .trinomial import Trinomial

SWEEP_CSV_HEADER = ["family", "a", "b", "c", "d", "group", "monogenic"]

# Hits the biquadratic family must produce whenever they lie inside the box.
KNOWN_BIQUADRATIC = ((-4, 2), (4, 2), (-5, 5))


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    output_format: str = "json"
    seed: int = 0
    trial_division_bound: int = 10**6
    rho_cap: int = 10**7
    workers: int = 1
    timing: bool = False
    # open text stream for incremental CSV rows (sweep --format csv)
    stream: io.TextIOBase | None = None

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        for k, v in self.params.items():
            if isinstance(v, int) and k.endswith(("max", "bound")) and v < 1:
                raise ValueError(f"--{k} must be positive")
        if self.params.get("trials", 0) < 0:
            raise ValueError("--trials must be >= 0")

    @property
    def budget(self) -> FactorBudget:
        return FactorBudget(self.trial_division_bound, self.rho_cap)


class CheckFailed(Exception):
    def __init__(self, payload: dict, message: str):
        super().__init__(message)
        self.payload = payload


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=_positive, default=None, help="default: $QTLAB_WORKERS or 1")
    common.add_argument("--trial-division-bound", type=_positive, default=10**6)
    common.add_argument("--rho-cap", type=_positive, default=10**7)
    common.add_argument("--timing", action="store_true", help="include wall-clock timings (output no longer reproducible)")

    p = argparse.ArgumentParser(prog="qtlab", description=__doc__.split("\n\n")[0].strip())
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="classify x^4 + c x + d")
    c.add_argument("--c", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--trials", type=int, default=0, help="Frobenius sample size (primes); 0 to skip")

    s = sub.add_parser("sweep", parents=[common], help="exhaustive sweep of a trinomial family")
    s.add_argument("--family", choices=("linear", "biquadratic", "cubic"), required=True)
    s.add_argument("--cmax", type=_positive)
    s.add_argument("--bmax", type=_positive)
    s.add_argument("--amax", type=_positive)
    s.add_argument("--dmax", type=_positive, required=True)

    v = sub.add_parser("verify", parents=[common], help="identity and table suites")
    v.add_argument("--suite", choices=("identities", "mod9", "parity", "jks-vs-dedekind", "all"), default="all")
    v.add_argument("--bound", type=_positive, default=None)

    e = sub.add_parser("ec", parents=[common], help="integral points on Y^2 = X^3 - 2^k X")
    e.add_argument("--k", type=_positive, required=True)
    e.add_argument("--xbound", type=_positive, default=2 * 10**6)

    sub.add_parser("report", parents=[common], help="run every verification at desk-scale defaults")
    return p


def _config(args: argparse.Namespace) -> RunConfig:
    skip = {"command", "format", "out", "seed", "workers", "trial_division_bound", "rho_cap", "timing"}
    return RunConfig(
        command=args.command,
        params={k: v for k, v in vars(args).items() if k not in skip},
        output_format=args.format,
        seed=args.seed,
        trial_division_bound=args.trial_division_bound,
        rho_cap=args.rho_cap,
        workers=args.workers or default_workers(),
        timing=args.timing,
    )


# ---- commands -------------------------------------------------------------

def cmd_classify(cfg: RunConfig) -> dict:
    T = Trinomial(cfg.params["c"], cfg.params["d"])
    rep = classify_trinomial(T, cfg.budget)
    out = rep.to_dict(timing=cfg.timing)
    if cfg.params.get("trials") and rep.irreducible:
        out["frobenius"] = {"primes": cfg.params["trials"], "seed": cfg.seed,
                            "shapes": frobenius_pattern_sample(T, cfg.params["trials"], cfg.seed)}
    return out


def _sweep_bounds(cfg: RunConfig) -> int:
    key = {"linear": "cmax", "biquadratic": "bmax", "cubic": "amax"}[cfg.params["family"]]
    first = cfg.params.get(key)
    if first is None:
        raise ValueError(f"--family {cfg.params['family']} needs --{key}")
    return first


def cmd_sweep(cfg: RunConfig) -> dict:
    family = cfg.params["family"]
    first, dmax = _sweep_bounds(cfg), cfg.params["dmax"]
    on_part = None
    if cfg.stream is not None:
        writer = csv.writer(cfg.stream, lineterminator="\n")
        writer.writerow(SWEEP_CSV_HEADER)

        def on_part(part):
            for q, status in part.c4_members:
                writer.writerow([family, *q, "C4", status])
            cfg.stream.flush()

    res = sweep(family, first, dmax, cfg.budget, cfg.workers, on_part=on_part)
    out = res.to_dict()
    found = sorted((h.coeffs[1], h.coeffs[3]) for h in res.hits) if family == "biquadratic" else None
    if family == "biquadratic":
        expected = sorted((b, d) for b, d in KNOWN_BIQUADRATIC if abs(b) <= first and abs(d) <= dmax)
        ok = found == expected
    else:
        ok = not res.hits
    out["c4_members"] = [{"coeffs": list(q), "status": s} for q, s in res.c4_members]
    out["ok"] = ok and res.skipped_unknown == 0
    if not out["ok"]:
        raise CheckFailed(out, f"sweep {family}: unexpected hits or unknown statuses")
    return out


def cmd_verify(cfg: RunConfig) -> dict:
    suite = cfg.params["suite"]
    bound = cfg.params.get("bound")
    results = []
    if suite in ("identities", "all"):
        results.append(verify_identities(bound or 100))
    if suite in ("parity", "all"):
        results.append(parity_observations_check(bound or 100))
    if suite in ("mod9", "all"):
        table = sorted(verify_mod9_table())
        results.append({"suite": "mod9", "table": [list(p) for p in table], "failures": 0})
    if suite in ("jks-vs-dedekind", "all"):
        results.append(jks_dedekind_agreement(bound or 60))
    out = {"suites": results, "ok": all(r["failures"] == 0 for r in results)}
    if not out["ok"]:
        raise CheckFailed(out, "verification suite reported failures")
    return out


def cmd_ec(cfg: RunConfig) -> dict:
    k, xbound = cfg.params["k"], cfg.params["xbound"]
    found = ec_points_bruteforce(k, xbound)
    expected = ec_expected_points(k).restricted(xbound)
    rows = []
    for p in found:
        co = ec_point_to_coefficients(p)
        rows.append({
            "X": p.X, "Y": p.Y,
            "t": None if co is None else co.t,
            "c": None if co is None else co.c,
            "d": None if co is None else str(co.d),
            "d_integral": None if co is None else co.integral,
        })
    out = {"k": k, "k_mod4": k % 4, "xbound": xbound, "points": rows,
           "expected": [[p.X, p.Y] for p in expected], "matches_expected": found == expected}
    if not out["matches_expected"]:
        raise CheckFailed(out, f"E_{k}: brute-force points differ from the table")
    return out


def cmd_report(cfg: RunConfig) -> dict:
    sections = {}
    for name, c, d in (("c4_example", 5, 5), ("s4_example", 1, 1), ("d4_example", 4, -1)):
        sections[name] = classify_trinomial(Trinomial(c, d), cfg.budget).to_dict(timing=cfg.timing)
    sections["verify"] = cmd_verify(RunConfig("verify", {"suite": "all", "bound": None}, workers=cfg.workers))
    sections["ec"] = [
        {k: v for k, v in cmd_ec(RunConfig("ec", {"k": k, "xbound": 10**5})).items() if k != "points"}
        for k in range(1, 14)
    ]
    sweeps = {}
    for family, first, dmax in (("linear", 50, 50), ("biquadratic", 10, 10), ("cubic", 20, 20)):
        key = {"linear": "cmax", "biquadratic": "bmax", "cubic": "amax"}[family]
        res = cmd_sweep(RunConfig("sweep", {"family": family, key: first, "dmax": dmax},
                                  workers=cfg.workers, trial_division_bound=cfg.trial_division_bound,
                                  rho_cap=cfg.rho_cap))
        sweeps[family] = {k: res[k] for k in ("bounds", "scanned", "group_counts", "skipped_unknown", "ok")}
        sweeps[family]["hits"] = [h["input"]["polynomial"] for h in res["hits"]]
    sections["sweeps"] = sweeps
    return sections


COMMANDS = {"classify": cmd_classify, "sweep": cmd_sweep, "verify": cmd_verify, "ec": cmd_ec, "report": cmd_report}


# ---- output ---------------------------------------------------------------

def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(
            f"{pad}-\n" + _text(v, indent + 1) if isinstance(v, dict) else f"{pad}- {v}" for v in obj
        )
    return f"{pad}{obj}"


def _csv(command: str, payload: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if command == "sweep":
        return ""  # rows were streamed while the sweep ran
    elif command == "ec":
        w.writerow(["k", "X", "Y", "t", "c", "d", "d_integral"])
        for r in payload["points"]:
            w.writerow([payload["k"], r["X"], r["Y"], r["t"], r["c"], r["d"], r["d_integral"]])
    elif command == "verify":
        w.writerow(["suite", "instances", "failures"])
        for r in payload["suites"]:
            w.writerow([r["suite"], r.get("instances", r.get("checks", "")), r["failures"]])
    else:
        w.writerow(["key", "value"])
        for k, v in _flatten(payload):
            w.writerow([k, v])
    return buf.getvalue()


def _flatten(obj, prefix: str = ""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else k)
    elif isinstance(obj, list) and obj and isinstance(obj[0], (dict, list)):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, json.dumps(obj) if isinstance(obj, list) else obj


def render(cfg: RunConfig, payload: dict) -> str:
    if cfg.output_format == "json":
        return json.dumps(payload, indent=2) + "\n"
    if cfg.output_format == "csv":
        return _csv(cfg.command, payload)
    return _text(payload) + "\n"


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    sink = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    cfg = None
    try:
        try:
            cfg = _config(args)
            if cfg.command == "sweep" and cfg.output_format == "csv":
                cfg.stream = sink
            payload = COMMANDS[cfg.command](cfg)
        except CheckFailed as exc:
            sink.write(render(cfg, exc.payload))
            print(f"qtlab: check failed: {exc}", file=sys.stderr)
            return 1
        except VerificationFailure as exc:
            print(f"qtlab: verification failed: {exc}", file=sys.stderr)
            return 1
        except ValueError as exc:
            print(f"qtlab: {exc}", file=sys.stderr)
            parser.print_usage(sys.stderr)
            return 2
        sink.write(render(cfg, payload))
        return 0
    finally:
        if sink is not sys.stdout:
            sink.close()
        else:
            sink.flush()


def main() -> None:
    sys.exit(run())
