"""Command-line driver: involution and parameter tables, coset verification, self-test."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import re
import sys
import time
from dataclasses import dataclass

from .cosets import CheckpointError
from .expected import VERIFICATION
from .involutions import classify_order_two, verify_torus_lift
from .nilpotent import parameters
from .rootsys import EXCEPTIONAL, build_root_system
from .sqint import CaseVerdict, verify_case

EXIT_OK, EXIT_MISMATCH, EXIT_SOFT, EXIT_USAGE, EXIT_IO = 0, 1, 2, 64, 74
WORKERS_ENV = "SQINT_WORKERS"


@dataclass
class RunConfig:
    command: str
    group: str | None = None
    orbit: str | None = None
    fixed: str | None = None
    fmt: str = "json"
    workers: int = 1
    kmax: int = 3
    checkpoint: str | None = None
    skip_e8: bool = False

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("worker count must be at least 1")
        if self.fmt not in ("json", "csv", "md"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.kmax < 0:
            raise ValueError("kmax must be nonnegative")


class UsageError(ValueError):
    pass


def _cell(v) -> str:
    if v is None:
        return "NA"
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return str(v)


def render(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(records, indent=2, ensure_ascii=False)
    cols = list(records[0]) if records else []
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(cols)
        for r in records:
            w.writerow([_cell(r[c]) for c in cols])
        return buf.getvalue().rstrip("\r\n")
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    for r in records:
        lines.append("| " + " | ".join(_cell(r[c]).replace("|", "\\|") for c in cols) + " |")
    return "\n".join(lines)


def _groups(sel: str | None) -> tuple[str, ...]:
    if sel is None or sel.lower() == "all":
        return EXCEPTIONAL
    name = sel.upper()
    if name not in EXCEPTIONAL:
        raise UsageError(f"unknown group {sel!r}; choose from {', '.join(EXCEPTIONAL)}")
    return (name,)


def involution_records(groups) -> list[dict]:
    out = []
    for g in groups:
        for cls in classify_order_two(g):
            rec = cls.record()
            rec["lift_verified"] = verify_torus_lift(cls).ok
            out.append(rec)
    return out


def parameter_records(groups) -> list[dict]:
    return [c.record() for g in groups for c in parameters(g)]


def expected_row(group, fixed, orbit):
    for row in VERIFICATION:
        if row[:3] == (group, fixed, orbit):
            return row
    return None


def compare(verdict: CaseVerdict) -> str:
    """"match", "mismatch" or "soft" (inconclusive or unsupported where values were expected)."""
    row = expected_row(verdict.group, verdict.fixed_type, verdict.orbit)
    if row is None:
        return "match" if verdict.supported and verdict.status == "ok" else "soft"
    _, _, _, wtype, m, k = row
    if m is None:
        if verdict.supported:
            return "mismatch"
        return "match" if verdict.wl_type == wtype else "mismatch"
    if not verdict.supported or verdict.status != "ok":
        return "soft"
    ok = (verdict.wl_type, verdict.m, verdict.k_bd) == (wtype, m, k)
    return "match" if ok else "mismatch"


def _progress(label):
    start = time.time()

    def report(done, total, nodes):
        rate = nodes / max(time.time() - start, 1e-9)
        print(f"[{label}] block {done}/{total} cosets {nodes} ({rate:,.0f}/s)",
              file=sys.stderr, flush=True)
    return report


def _select_case(group, orbit, fixed):
    cases = [c for c in parameters(group) if c.saturation == orbit
             and (fixed is None or c.fixed_type == fixed)]
    if not cases:
        raise UsageError(f"no case {orbit!r} for {group}"
                         + (f" with fixed subalgebra {fixed}" if fixed else ""))
    if len(cases) > 1:
        opts = ", ".join(c.fixed_type for c in cases)
        raise UsageError(f"{orbit} occurs for several fixed subalgebras ({opts}); pass --fixed")
    return cases[0]


def _safe(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.+-]", "_", name)


def _verdict_record(v: CaseVerdict) -> dict:
    rec = v.record()
    rec["agreement"] = compare(v)
    return rec


def _exit_code(states) -> int:
    if any(s == "mismatch" for s in states):
        return EXIT_MISMATCH
    if any(s == "soft" for s in states):
        return EXIT_SOFT
    return EXIT_OK


def run_command(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    if cfg.command == "involutions":
        print(render(involution_records(_groups(cfg.group)), cfg.fmt), file=out)
        return EXIT_OK
    if cfg.command == "parameters":
        print(render(parameter_records(_groups(cfg.group)), cfg.fmt), file=out)
        return EXIT_OK
    if cfg.command == "verify":
        if not cfg.group or not cfg.orbit:
            raise UsageError("verify needs a group and an orbit label")
        (group,) = _groups(cfg.group)
        case = _select_case(group, cfg.orbit, cfg.fixed)
        v = verify_case(case, kmax=cfg.kmax, workers=cfg.workers, checkpoint=cfg.checkpoint,
                        progress=_progress(f"{group} {case.fixed_type} {case.saturation}"))
        print(render([_verdict_record(v)], cfg.fmt), file=out)
        return _exit_code([compare(v)])
    if cfg.command == "verify-all":
        groups = [g for g in EXCEPTIONAL if not (cfg.skip_e8 and g == "E8")]
        if cfg.checkpoint:
            os.makedirs(cfg.checkpoint, exist_ok=True)
        recs, states = [], []
        for g in groups:
            for case in parameters(g):
                label = f"{g} {case.fixed_type} {case.saturation}"
                ck = None
                if cfg.checkpoint:
                    ck = os.path.join(cfg.checkpoint,
                                      _safe(f"{g}_{case.fixed_type}_{case.saturation}") + ".journal")
                v = verify_case(case, kmax=cfg.kmax, workers=cfg.workers, checkpoint=ck,
                                progress=_progress(label))
                print(f"[{label}] {v.status} m={v.m} k_bd={v.k_bd} "
                      f"({v.elapsed_sec:.1f}s)", file=sys.stderr, flush=True)
                recs.append(_verdict_record(v))
                states.append(recs[-1]["agreement"])
        print(render(recs, cfg.fmt), file=out)
        return _exit_code(states)
    if cfg.command == "selftest":
        report = selftest()
        print(json.dumps(report, indent=2), file=out)
        return EXIT_OK if report["ok"] else EXIT_MISMATCH
    raise UsageError(f"unknown command {cfg.command!r}")


def selftest(samples: int = 200, seed: int = 0) -> dict:
    """Weyl-group invariants, the cocycle identity on random data, and the numeric checks."""
    from .cfunction import cocycle_check, numeric_selftest
    from .weyl import WeylElement

    rng = random.Random(seed)
    weyl = []
    for g in ("G2", "F4", "E6"):
        rs = build_root_system(g)
        bad = 0
        for _ in range(samples):
            w = WeylElement.from_word(rs, [rng.randrange(rs.rank) for _ in range(rng.randrange(30))])
            inv = w.inversions()
            lhs = rs.weight_to_roots(tuple(a - b for a, b in zip(rs.rho, w.inverse().act(rs.rho))))
            rhs = tuple(sum(col) for col in zip(*inv)) if inv else (0,) * rs.rank
            bad += w.length != len(inv) or tuple(lhs) != rhs
        weyl.append({"group": g, "samples": samples, "failures": bad})
    cocycle = []
    for g in ("G2", "F4"):
        rs = build_root_system(g)
        bad = 0
        for _ in range(samples):
            w1, w2 = (WeylElement.from_word(rs, [rng.randrange(rs.rank) for _ in range(rng.randrange(20))])
                      for _ in range(2))
            lam = tuple(rng.randint(-4, 4) for _ in range(rs.rank))
            delta = tuple(rng.randint(0, 1) for _ in range(rs.rank))
            bad += not cocycle_check(w1, w2, lam, delta)[0]
        cocycle.append({"group": g, "samples": samples, "failures": bad})
    numeric = numeric_selftest()
    ok = all(r["failures"] == 0 for r in weyl + cocycle) and all(r["ok"] for r in numeric)
    return {"ok": ok, "weyl": weyl, "cocycle": cocycle, "numeric": numeric}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="unipotent-sqint", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "md"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("involutions", parents=[common], help="order-two classes of the dual group")
    s.add_argument("group", nargs="?", default="all")
    s = sub.add_parser("parameters", parents=[common], help="distinguished Arthur parameters")
    s.add_argument("group", nargs="?", default="all")
    run = argparse.ArgumentParser(add_help=False)
    default_workers = os.environ.get(WORKERS_ENV, "1")
    run.add_argument("--workers", type=int, default=int(default_workers) if default_workers.isdigit() else 1,
                     help=f"worker processes (default from ${WORKERS_ENV}, else 1)")
    run.add_argument("--kmax", type=int, default=3)
    run.add_argument("--checkpoint", default=None,
                     help="journal file (verify) or directory of journals (verify-all)")
    s = sub.add_parser("verify", parents=[common, run], help="verify one case")
    s.add_argument("group")
    s.add_argument("orbit")
    s.add_argument("--fixed", default=None, help="fixed subalgebra, when the orbit is ambiguous")
    s = sub.add_parser("verify-all", parents=[common, run], help="verify every case against the expected table")
    s.add_argument("--skip-e8", action="store_true")
    sub.add_parser("selftest", help="invariant, cocycle and numeric checks")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(command=args.command, group=getattr(args, "group", None),
                        orbit=getattr(args, "orbit", None), fixed=getattr(args, "fixed", None),
                        fmt=getattr(args, "fmt", "json"), workers=getattr(args, "workers", 1),
                        kmax=getattr(args, "kmax", 3), checkpoint=getattr(args, "checkpoint", None),
                        skip_e8=getattr(args, "skip_e8", False))
        return run_command(cfg)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CheckpointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
