"""Suite benchmarking and PAR-2 scoring around the single-check entry point.

Bench mode launches one subprocess per (instance, mode) pair so runs are
isolated the way competition harnesses isolate them; a thread pool only
shepherds the subprocesses.  Each run writes its statistics to a temp JSON
file which becomes one CSV row.  Crashed runs count as budget, timed-out
runs as timeout; neither aborts the suite.
"""

from __future__ import annotations

import csv
import json
import subprocess
import sys
import tempfile
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .config import EngineConfig
from .engine import CheckResult, check
from .system import to_transition_system
from .aiger import parse_aiger_file

SOLVED = ("safe", "unsafe")
CSV_COLUMNS = [
    "instance",
    "mode",
    "verdict",
    "time",
    "level",
    "clauses",
    "gen_calls",
    "seed",
]

# Extra wall clock granted beyond the engine's own deadline before the
# subprocess is killed (covers one long SAT call straddling the deadline).
KILL_GRACE = 30.0


@dataclass
class RunRecord:
    instance: str
    mode: str
    verdict: str
    time: float
    level: int
    clauses: int
    gen_calls: int
    seed: int


def run_check(path: str | Path, config: EngineConfig) -> tuple[RunRecord, CheckResult]:
    """In-process single check; bench uses subprocesses instead."""
    model = parse_aiger_file(str(path))
    ts = to_transition_system(model, config.property_index)
    result = check(ts, config)
    rec = RunRecord(
        instance=Path(path).stem,
        mode=config.mode,
        verdict=result.status,
        time=result.time,
        level=result.level,
        clauses=result.stats.clauses_added,
        gen_calls=result.stats.gen_calls,
        seed=config.seed,
    )
    return rec, result


def write_csv(records: list[RunRecord], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for r in records:
            # Full-precision time so PAR-2 recomputed from the file matches
            # the in-memory computation bit for bit.
            w.writerow(
                [r.instance, r.mode, r.verdict, repr(r.time), r.level,
                 r.clauses, r.gen_calls, r.seed]
            )


def read_csv(path: str | Path) -> list[RunRecord]:
    out: list[RunRecord] = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            out.append(
                RunRecord(
                    instance=row["instance"],
                    mode=row["mode"],
                    verdict=row["verdict"],
                    time=float(row["time"]),
                    level=int(row["level"]),
                    clauses=int(row["clauses"]),
                    gen_calls=int(row["gen_calls"]),
                    seed=int(row["seed"]),
                )
            )
    return out


@dataclass
class Par2Summary:
    par2: float
    solved: int
    total: int


def compute_par2(records: list[RunRecord], limit: float) -> dict[str, Par2Summary]:
    """Mean over instances of (time if solved else 2 * limit), per mode."""
    by_mode: dict[str, list[RunRecord]] = {}
    for r in records:
        by_mode.setdefault(r.mode, []).append(r)
    out: dict[str, Par2Summary] = {}
    for mode, rs in by_mode.items():
        total = sum(r.time if r.verdict in SOLVED else 2.0 * limit for r in rs)
        solved = sum(1 for r in rs if r.verdict in SOLVED)
        out[mode] = Par2Summary(par2=total / len(rs), solved=solved, total=len(rs))
    return out


def collect_instances(directory: str | Path) -> list[Path]:
    """AIGER files in the directory, one per instance: when an .aag and an
    .aig share a stem they are the same circuit, keep the .aag."""
    d = Path(directory)
    files = sorted(p for p in d.iterdir() if p.suffix in (".aag", ".aig"))
    stems_ascii = {p.stem for p in files if p.suffix == ".aag"}
    return [p for p in files if p.suffix == ".aag" or p.stem not in stems_ascii]


def _bench_one(path: Path, mode: str, timeout: float, seed: int) -> RunRecord:
    stem = path.stem
    with tempfile.NamedTemporaryFile(suffix=".json", delete=False) as tf:
        stats_path = tf.name
    cmd = [
        sys.executable, "-m", "ic3mab", "check", str(path),
        "--engine", mode, "--seed", str(seed),
        "--timeout", str(timeout), "--stats", stats_path,
    ]
    t0 = time.monotonic()
    try:
        proc = subprocess.run(
            cmd, capture_output=True, timeout=timeout + KILL_GRACE
        )
    except subprocess.TimeoutExpired:
        Path(stats_path).unlink(missing_ok=True)
        return RunRecord(stem, mode, "timeout", timeout, 0, 0, 0, seed)
    wall = time.monotonic() - t0
    try:
        payload = json.loads(Path(stats_path).read_text())
    except (OSError, ValueError):
        payload = None
    finally:
        Path(stats_path).unlink(missing_ok=True)
    if proc.returncode not in (0, 10, 20) or payload is None:
        # Crash or unreadable stats: recorded, never aborts the suite.
        return RunRecord(stem, mode, "budget", wall, 0, 0, 0, seed)
    return RunRecord(
        instance=stem,
        mode=payload["mode"],
        verdict=payload["verdict"],
        time=payload["time"],
        level=payload["level"],
        clauses=payload["clauses"],
        gen_calls=payload["gen_calls"],
        seed=payload["seed"],
    )


def run_bench(
    directory: str | Path,
    modes: list[str],
    timeout: float,
    jobs: int = 1,
    out_csv: str | Path | None = None,
    seed: int = 0,
) -> list[RunRecord]:
    instances = collect_instances(directory)
    tasks = [(p, m) for p in instances for m in modes]
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        records = list(
            pool.map(lambda t: _bench_one(t[0], t[1], timeout, seed), tasks)
        )
    records.sort(key=lambda r: (r.instance, r.mode))
    if out_csv is not None:
        write_csv(records, out_csv)
    return records
