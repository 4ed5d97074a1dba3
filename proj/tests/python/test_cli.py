import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("CEERLAB_CLI", "ceerlab")
ROOT = Path(os.environ.get("CEERLAB_ROOT", Path(__file__).resolve().parents[2]))
SCENARIOS = ["dark-ring-basic", "dark-group", "star-universal", "sigma3", "sug-indexset"]


def cli(*args, check=True):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise AssertionError(f"{args}: exit {proc.returncode}\n{proc.stdout}\n{proc.stderr}")
    return proc


@pytest.mark.parametrize("name", SCENARIOS)
def test_run_verify_and_rerun(tmp_path, name):
    first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    out = cli("run", ROOT / "scenarios" / f"{name}.scn", "--out", first).stdout
    assert "log:" in out
    cli("run", ROOT / "scenarios" / f"{name}.scn", "--out", second)
    assert first.read_bytes() == second.read_bytes()
    report = cli("verify", first, "all").stdout
    assert "FAIL" not in report


def test_dark_ring_summary_reports_collapses(tmp_path):
    out = cli("run", ROOT / "scenarios" / "dark-ring-basic.scn", "--out", tmp_path / "r.jsonl").stdout
    assert "D0 acted at stage 13" in out
    assert "D1 acted at stage 14" in out


def test_invalid_epsilon_is_rejected(tmp_path):
    proc = cli("run", ROOT / "scenarios" / "dark-ring-basic.scn", "--epsilon", "0", "--out",
               tmp_path / "r.jsonl", check=False)
    assert proc.returncode != 0
    assert "epsilon" in proc.stderr


def test_flag_overrides(tmp_path):
    log = tmp_path / "r.jsonl"
    cli("run", ROOT / "scenarios" / "star-universal.scn", "--stages", "30", "--out", log)
    header = json.loads(log.read_text().splitlines()[0])["header"]
    assert header["stages"] == 30


def test_vi_vs_u_and_corruption(tmp_path):
    log = tmp_path / "s.jsonl"
    cli("run", ROOT / "scenarios" / "star-universal.scn", "--out", log)
    assert "vi-vs-U: pass" in cli("verify", log, "vi-vs-U").stdout

    lines = log.read_text().splitlines()
    init = json.loads(lines[1])
    last = json.loads(lines[-1])
    duplicate = init["emitted-relations"][0]
    last["emitted-relations"].append(duplicate)
    lines[-1] = json.dumps(last)
    bad = tmp_path / "bad.jsonl"
    bad.write_text("\n".join(lines) + "\n")
    proc = cli("verify", bad, "triangularity", check=False)
    assert proc.returncode == 1
    assert duplicate in proc.stdout


def test_empty_log_passes_vacuously(tmp_path):
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    proc = cli("verify", empty, "level-census")
    assert "warning" in proc.stdout
    assert "pass (vacuous)" in proc.stdout


def test_unknown_suite(tmp_path):
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    proc = cli("verify", empty, "no-such-suite", check=False)
    assert proc.returncode == 2
    assert "unknown suite" in proc.stderr


def test_probes():
    basic = ROOT / "fixtures" / "ceer_basic.jsonl"
    ident = ROOT / "fixtures" / "identity10.jsonl"
    assert cli("probe", basic, "related", 1, 2, "--stage", 3).stdout.strip() == "true"
    assert cli("probe", basic, "related", 1, 2, "--stage", 2).stdout.strip() == "false"
    classes = cli("probe", ident, "classes", "--bound", 10).stdout.split()
    assert classes == [f"[{i}]" for i in range(10)]
    assert cli("probe", basic, "verify-reduction", "--map", "identity").stdout.strip() == "no violations"
    proc = cli("probe", basic, "verify-reduction", "--with", ident, "--map", "identity", "--bound", 10, check=False)
    assert proc.returncode == 1
    join = cli("probe", basic, "join", "--with", ident, "--bound", 20).stdout
    assert '"bound":20' in join
    pulled = cli("probe", basic, "pullback", "--map", "constant:0", "--bound", 5).stdout
    assert pulled.count('"a"') >= 4
    product = cli("probe", basic, "product", "--with", ident, "--bound", 30).stdout
    assert '"bound":30' in product


def test_probe_parse_errors(tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"a":1,"b":2,"s":3}\n{"a":\n')
    proc = cli("probe", bad, "classes", check=False)
    assert proc.returncode == 2
    assert "line 2" in proc.stderr
