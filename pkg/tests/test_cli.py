"""Command-line interface: exit codes, artifacts, subcommand plumbing."""

from __future__ import annotations

import json
import shutil
from pathlib import Path

from ic3mab.cli import EXIT_INCONCLUSIVE, EXIT_SAFE, EXIT_UNSAFE, main

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def test_check_unsafe_exit_and_witness(capsys, tmp_path):
    wit = tmp_path / "w.txt"
    code = main([
        "check", str(CORPUS / "cnt_unsafe_n3.aag"),
        "--engine", "standard", "--witness", str(wit),
    ])
    out = capsys.readouterr().out
    assert code == EXIT_UNSAFE
    assert out.startswith("1\nb0\n000\n") and out.endswith(".\n")
    assert wit.read_text() == out


def test_check_safe_exit_and_certificate(capsys, tmp_path):
    cert = tmp_path / "c.txt"
    code = main([
        "check", str(CORPUS / "cnt_sat_safe_n3.aag"),
        "--engine", "mab", "--certificate", str(cert),
    ])
    assert code == EXIT_SAFE
    assert capsys.readouterr().out == "0\n"
    assert cert.read_text().startswith("inv ")


def test_check_inconclusive_exit(capsys):
    code = main([
        "check", str(CORPUS / "guard_safe_n10.aag"),
        "--engine", "standard", "--max-conflicts", "1",
    ])
    assert code == EXIT_INCONCLUSIVE
    assert capsys.readouterr().out == "2\n"


def test_check_stats_and_log_files(capsys, tmp_path):
    stats, log = tmp_path / "s.json", tmp_path / "ev.jsonl"
    code = main([
        "check", str(CORPUS / "cnt_unsafe_n4.aag"), "--engine", "mab",
        "--seed", "3", "--stats", str(stats), "--log", str(log),
    ])
    capsys.readouterr()
    assert code == EXIT_UNSAFE
    payload = json.loads(stats.read_text())
    assert payload["verdict"] == "unsafe" and payload["seed"] == 3
    assert payload["mode"] == "mab" and payload["gen_calls"] > 0
    lines = log.read_text().splitlines()
    assert lines and all(json.loads(l)["t"] == i for i, l in enumerate(lines))


def test_check_rejects_missing_and_malformed(capsys, tmp_path):
    assert main(["check", str(tmp_path / "nope.aag")]) == 1
    assert "error:" in capsys.readouterr().err
    bad = tmp_path / "bad.aag"
    bad.write_text("definitely not aiger\n")
    assert main(["check", str(bad)]) == 1
    assert "error:" in capsys.readouterr().err


def test_check_property_out_of_range(capsys):
    code = main(["check", str(CORPUS / "cnt_unsafe_n3.aag"), "--property", "5"])
    assert code == 1
    assert "property" in capsys.readouterr().err


def test_bench_then_par2(capsys, tmp_path):
    for name in ("cnt_unsafe_n3", "cnt_mod_safe_n3"):
        shutil.copy(CORPUS / f"{name}.aag", tmp_path / f"{name}.aag")
    out = tmp_path / "r.csv"
    code = main([
        "bench", str(tmp_path), "--engines", "standard,mab",
        "--timeout", "60", "--jobs", "2", "--out", str(out), "--seed", "1",
    ])
    assert code == 0
    assert "4 runs, 4 solved" in capsys.readouterr().out

    code = main(["par2", str(out), "--limit", "60"])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2  # one line per mode, sorted
    assert lines[0].startswith("mab par2=") and lines[1].startswith("standard par2=")
    for line in lines:
        assert "par2_full=" in line and "solved=2 total=2" in line


def test_bench_rejects_unknown_engine(capsys, tmp_path):
    assert main(["bench", str(tmp_path), "--engines", "nope"]) == 1
    assert "unknown engine" in capsys.readouterr().err


def test_par2_missing_csv(capsys, tmp_path):
    assert main(["par2", str(tmp_path / "none.csv")]) == 1
    assert "error:" in capsys.readouterr().err
