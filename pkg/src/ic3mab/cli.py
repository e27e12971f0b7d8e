"""Command-line entry points: single checks, suite benchmarking, scoring."""

from __future__ import annotations

import argparse
import json
import sys

from .aiger import AigerError, parse_aiger_file
from .config import DEFAULT_TIMEOUT, ENGINE_MODES, EngineConfig
from .engine import check
from .harness import compute_par2, read_csv, run_bench
from .system import PropertyError, to_transition_system
from .witness import format_certificate, format_witness

EXIT_UNSAFE = 20
EXIT_SAFE = 10
EXIT_INCONCLUSIVE = 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ic3mab",
        description="Bit-level safety model checker with bandit-guided generalization.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check one AIGER file")
    c.add_argument("file", help="AIGER input (.aag or .aig)")
    c.add_argument("--engine", choices=ENGINE_MODES, default="mab")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT, help="seconds")
    c.add_argument("--property", type=int, default=0, help="bad-property index")
    c.add_argument("--witness", metavar="PATH", help="write the witness text here")
    c.add_argument("--certificate", metavar="PATH", help="write the invariant here")
    c.add_argument("--log", metavar="PATH", help="JSONL generalization event log")
    c.add_argument("--dump-cnf", metavar="DIR", help="DIMACS dump per SAT query")
    c.add_argument("--stats", metavar="PATH", help="write run statistics as JSON")
    c.add_argument("--max-conflicts", type=int, default=None,
                   help="per-query conflict budget (exceeding gives verdict 2)")
    c.add_argument("--self-check", action="store_true",
                   help="re-verify frame conditions while running")

    b = sub.add_parser("bench", help="run a directory of instances")
    b.add_argument("dir", help="directory of AIGER files")
    b.add_argument("--engines", default=",".join(ENGINE_MODES),
                   help="comma-separated engine modes")
    b.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out", default="results.csv", help="CSV output path")

    r = sub.add_parser("par2", help="PAR-2 scores per mode from a results CSV")
    r.add_argument("csv")
    r.add_argument("--limit", type=float, default=DEFAULT_TIMEOUT,
                   help="time limit the runs used, seconds")
    return p


def _cmd_check(args: argparse.Namespace) -> int:
    try:
        model = parse_aiger_file(args.file)
        ts = to_transition_system(model, args.property)
    except (AigerError, PropertyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    cfg = EngineConfig(
        mode=args.engine,
        seed=args.seed,
        timeout=args.timeout,
        property_index=args.property,
        log_path=args.log,
        witness_path=args.witness,
        certificate_path=args.certificate,
        dump_cnf_dir=args.dump_cnf,
        max_conflicts_per_query=args.max_conflicts,
        self_check=args.self_check,
    )
    result = check(ts, cfg)

    witness_text = format_witness(result, model)
    sys.stdout.write(witness_text)
    if cfg.witness_path:
        with open(cfg.witness_path, "w") as fh:
            fh.write(witness_text)
    if cfg.certificate_path and result.status == "safe":
        with open(cfg.certificate_path, "w") as fh:
            fh.write(format_certificate(result.invariant, model))
    if args.stats:
        payload = {
            "instance": args.file,
            "mode": cfg.mode,
            "verdict": result.status,
            "time": result.time,
            "level": result.level,
            "clauses": result.stats.clauses_added,
            "gen_calls": result.stats.gen_calls,
            "sat_calls": result.stats.sat_calls,
            "seed": cfg.seed,
        }
        with open(args.stats, "w") as fh:
            json.dump(payload, fh)
            fh.write("\n")
    if result.status == "unsafe":
        return EXIT_UNSAFE
    if result.status == "safe":
        return EXIT_SAFE
    return EXIT_INCONCLUSIVE


def _cmd_bench(args: argparse.Namespace) -> int:
    modes = [m.strip() for m in args.engines.split(",") if m.strip()]
    for m in modes:
        if m not in ENGINE_MODES:
            print(f"error: unknown engine mode {m!r}", file=sys.stderr)
            return 1
    records = run_bench(
        args.dir,
        modes,
        timeout=args.timeout,
        jobs=args.jobs,
        out_csv=args.out,
        seed=args.seed,
    )
    solved = sum(1 for r in records if r.verdict in ("safe", "unsafe"))
    print(f"{len(records)} runs, {solved} solved -> {args.out}")
    return 0


def _cmd_par2(args: argparse.Namespace) -> int:
    try:
        records = read_csv(args.csv)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if not records:
        print("error: no records", file=sys.stderr)
        return 1
    for mode, s in sorted(compute_par2(records, args.limit).items()):
        print(
            f"{mode} par2={s.par2:.2f} par2_full={s.par2!r} "
            f"solved={s.solved} total={s.total}"
        )
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "check":
        return _cmd_check(args)
    if args.command == "bench":
        return _cmd_bench(args)
    return _cmd_par2(args)


if __name__ == "__main__":
    sys.exit(main())
