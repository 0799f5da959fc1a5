"""Command line interface.

Exit codes: 0 success, 1 a verification check failed, 2 bad input or
usage, 3 a resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import verify as V
from .complexes import complex_of_ideal, stanley_reisner
from .degree_complexes import degree_complex
from .homology import Field, reduced_betti
from .io import (
    ParseError,
    complex_from_json,
    complex_to_json,
    format_complex,
    format_ideal,
    ideal_from_json,
    ideal_to_json,
    read_complex,
    read_ideal,
)
from .limits import ResourceLimitExceeded, limits
from .local_cohomology import MINUS_INFINITY, cohomology_table

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

CHECKS = ("fiber", "fiber-a1", "bigraded", "symbolic", "bound", "lemma29", "identities")
FIBER_CHECKS = ("fiber", "fiber-a1", "bigraded", "identities")


@dataclass
class RunConfig:
    command: str
    field: Field
    seed: int = 0
    threads: int = 1
    json: bool = False
    out: Optional[str] = None
    fmt: str = "table"
    max_cells: Optional[int] = None
    max_ms: Optional[int] = None

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("--threads must be positive")
        for cap in (self.max_cells, self.max_ms):
            if cap is not None and cap <= 0:
                raise ValueError("caps must be positive")


class UsageError(Exception):
    pass


def _null(x):
    return None if x == MINUS_INFINITY else x


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ai


def cmd_ai(args, cfg: RunConfig) -> int:
    I = read_ideal(args.ideal)
    if I.is_unit:
        raise UsageError("the unit ideal has a zero quotient")
    with limits(cfg.max_cells, cfg.max_ms):
        table = cohomology_table(I, cfg.field)
    a = [_null(x) for x in table.a]
    reg = _null(table.reg)
    if cfg.json or cfg.fmt == "json":
        text = _dump({"dim": table.krull_dim, "a": a, "reg": reg, "support": table.support()}) + "\n"
    elif cfg.fmt == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "a_i"])
        for i, x in enumerate(a):
            w.writerow([i, "" if x is None else x])
        text = buf.getvalue()
    else:
        shown = ", ".join("-inf" if x is None else str(x) for x in a)
        text = f"dim: {table.krull_dim}\na: [{shown}]\nreg: {reg}\nfield: {cfg.field}\n"
    _emit(text, cfg.out)
    return EXIT_OK


# degree-complex, sr, homology


def _parse_alpha(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad --alpha {text!r}") from None


def cmd_degree_complex(args, cfg: RunConfig) -> int:
    I = read_ideal(args.ideal)
    alpha = _parse_alpha(args.alpha)
    if len(alpha) != I.ambient:
        raise UsageError(f"--alpha has {len(alpha)} entries, ideal has {I.ambient} variables")
    _emit(_dump(complex_to_json(degree_complex(I, alpha))) + "\n", cfg.out)
    return EXIT_OK


def cmd_sr(args, cfg: RunConfig) -> int:
    if bool(args.complex) == bool(args.ideal):
        raise UsageError("give exactly one of --complex or --ideal")
    if args.complex:
        delta = read_complex(args.complex)
        if delta.is_void:
            raise UsageError("the void complex has no Stanley-Reisner ideal")
        I = stanley_reisner(delta)
        text = _dump(ideal_to_json(I)) + "\n" if cfg.json else format_ideal(I)
    else:
        delta = complex_of_ideal(read_ideal(args.ideal))
        text = _dump(complex_to_json(delta)) + "\n" if cfg.json else format_complex(delta)
    _emit(text, cfg.out)
    return EXIT_OK


def cmd_homology(args, cfg: RunConfig) -> int:
    delta = read_complex(args.complex)
    betti = reduced_betti(delta, cfg.field)
    if cfg.json:
        text = _dump({"field": str(cfg.field), "reduced_betti": {str(i - 1): b for i, b in enumerate(betti)}}) + "\n"
    else:
        text = "".join(f"H~_{i - 1} = {b}\n" for i, b in enumerate(betti)) or "void complex\n"
    _emit(text, cfg.out)
    return EXIT_OK


# verify


def _records_from_suite(path: str, check: str) -> list[dict]:
    records = []
    with open(path) as fh:
        for n, line in enumerate(fh, start=1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(exc.msg, n, exc.colno) from None
            kind = rec.get("check", check)
            if kind not in CHECKS:
                raise ParseError(f"unknown check {kind!r}", n)
            if check == "all" or kind == check:
                records.append({**rec, "check": kind})
    return records


def _random_records(check: str, count: int, seed: int, max_vars: int, max_power: int) -> list[dict]:
    kinds = CHECKS if check == "all" else (check,)
    rng = random.Random(seed)
    out = []
    for i in range(count):
        kind = kinds[i % len(kinds)]
        sub = rng.randrange(1 << 30)
        if kind in FIBER_CHECKS:
            s = max(1, max_vars // 2)
            r = max(1, max_vars - s)
            top = max_power if kind != "identities" else max_power
            inst = V.random_fiber_instances(1, sub, s=s, r=r, max_power=top,
                                            a1_hypotheses=kind in ("fiber-a1", "identities"),
                                            max_exp=2)[0]
            out.append({"check": kind, **inst.descriptor()})
        else:
            delta = V.random_complex_suite(1, sub, max_vertices=max(3, max_vars))[0]
            lo = 2 if kind == "bound" else 1
            out.append({"check": kind, "complex": complex_to_json(delta),
                        "n": rng.randint(lo, max(lo, max_power))})
    return out


def _fiber(rec: dict) -> V.FiberInstance:
    return V.FiberInstance(ideal_from_json(rec["I"]), ideal_from_json(rec["J"]), int(rec["k"]))


def run_record(rec: dict, field: Field) -> list[V.VerificationReport]:
    kind = rec["check"]
    if kind == "fiber":
        inst = _fiber(rec)
        js = [int(rec["j"])] if "j" in rec else range(2, inst.s + inst.r + 1)
        return [V.verify_fiber_aj(inst, j, field) for j in js]
    if kind == "fiber-a1":
        return [V.verify_fiber_a1(_fiber(rec), field)]
    if kind == "bigraded":
        inst = _fiber(rec)
        if "p" in rec:
            return [V.verify_bigraded_decomposition(inst, int(rec["p"]), rec["gamma"], field)]
        return [V.verify_bigraded_box(inst, field)]
    if kind == "identities":
        inst = _fiber(rec)
        return [V.verify_power_identities(inst.I, inst.J, inst.k)]
    delta = complex_from_json(rec["complex"])
    n = int(rec["n"])
    if kind == "symbolic":
        return [V.verify_symbolic_equals_ordinary(delta, n, field)]
    if kind == "bound":
        return [V.verify_bound_and_sphere(delta, n, field)]
    if kind == "lemma29":
        return [V.verify_witness_bound(delta, n, field)]
    raise ValueError(f"unknown check {kind!r}")


def _evaluate(job):
    rec, field_text, max_cells, max_ms = job
    field = Field.parse(field_text)
    try:
        with limits(max_cells, max_ms):
            reports = run_record(rec, field)
    except ResourceLimitExceeded as exc:
        reports = [V.VerificationReport(instance=rec, theorem=rec["check"], hypotheses={},
                                        lhs=None, rhs=None, verdict="resource-limit",
                                        details={"error": str(exc)})]
    return [r.to_json() for r in reports], [r.verdict for r in reports]


def evaluate_records(records: list[dict], cfg: RunConfig):
    """Results in input order, stopping after the first record with a failure."""
    jobs = [(rec, str(cfg.field), cfg.max_cells, cfg.max_ms) for rec in records]
    out = []
    if cfg.threads == 1 or len(jobs) <= 1:
        for job in jobs:
            out.append(_evaluate(job))
            if "fail" in out[-1][1]:
                break
        return out
    with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
        for res in pool.map(_evaluate, jobs):
            out.append(res)
            if "fail" in res[1]:
                break
    return out


def cmd_verify(args, cfg: RunConfig) -> int:
    if bool(args.suite) == (args.random is not None):
        raise UsageError("give exactly one of --suite or --random")
    if args.suite:
        records = _records_from_suite(args.suite, args.check)
    else:
        records = _random_records(args.check, args.random, cfg.seed, args.max_vars, args.max_power)
    results = evaluate_records(records, cfg)

    lines, failed_records = [], []
    counts = {"passed": 0, "failed": 0, "hypothesis-skipped": 0, "resource-limit": 0}
    for rec, (jsons, verdicts) in zip(records, results):
        lines.extend(jsons)
        for v in verdicts:
            key = {"pass": "passed", "fail": "failed", "hypothesis-not-met": "hypothesis-skipped"}.get(v, v)
            counts[key] += 1
        if "fail" in verdicts:
            failed_records.append(rec)
    body = "".join(line + "\n" for line in lines)
    summary = f"{counts['passed']}/{counts['failed']}/{counts['hypothesis-skipped']}"
    if counts["resource-limit"]:
        summary += f" resource-limit={counts['resource-limit']}"
    if cfg.out:
        _emit(body, cfg.out)
        print(f"passed/failed/hypothesis-skipped: {summary}")
    else:
        sys.stdout.write(body)
        print(f"passed/failed/hypothesis-skipped: {summary}", file=sys.stderr)
    if failed_records:
        replay = (cfg.out or "aiinv-verify") + ".replay.jsonl"
        with open(replay, "w") as fh:
            for rec in failed_records:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
        print(f"replay: {replay}", file=sys.stderr)
        return EXIT_FAIL
    if counts["resource-limit"]:
        return EXIT_CAP
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q (rationals) or fp:<p>")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true")
    common.add_argument("--out")
    common.add_argument("--format", dest="fmt", choices=("table", "json", "jsonl", "csv"), default="table")
    common.add_argument("--max-cells", type=int)
    common.add_argument("--max-ms", type=int, help="per-instance time budget; AIINV_MAX_MS overrides")

    p = argparse.ArgumentParser(prog="aiinv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    ai = sub.add_parser("ai", parents=[common], help="a-invariants and regularity of S/I")
    ai.add_argument("--ideal", required=True)

    ver = sub.add_parser("verify", parents=[common], help="run theorem checks")
    ver.add_argument("check", choices=CHECKS + ("all",))
    ver.add_argument("--suite")
    ver.add_argument("--random", type=int)
    ver.add_argument("--max-vars", type=int, default=6)
    ver.add_argument("--max-power", type=int, default=2)

    dc = sub.add_parser("degree-complex", parents=[common], help="facets of a degree complex")
    dc.add_argument("--ideal", required=True)
    dc.add_argument("--alpha", required=True, help="comma or space separated integers")

    sr = sub.add_parser("sr", parents=[common], help="complex <-> Stanley-Reisner ideal")
    sr.add_argument("--complex")
    sr.add_argument("--ideal")

    ho = sub.add_parser("homology", parents=[common], help="reduced Betti numbers")
    ho.add_argument("--complex", required=True)
    return p


COMMANDS = {
    "ai": cmd_ai,
    "verify": cmd_verify,
    "degree-complex": cmd_degree_complex,
    "sr": cmd_sr,
    "homology": cmd_homology,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(command=args.command, field=Field.parse(args.field), seed=args.seed,
                        threads=args.threads, json=args.json, out=args.out, fmt=args.fmt,
                        max_cells=args.max_cells, max_ms=args.max_ms)
        return COMMANDS[args.command](args, cfg)
    except (ParseError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
