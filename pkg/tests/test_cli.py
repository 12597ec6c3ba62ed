"""End-to-end CLI behavior through the in-process service."""

from __future__ import annotations

import json

import pytest

from domgame.census import pair_census
from domgame.cli import main
from domgame.verify import ClauseResult, VerifyReport


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# solve


def test_solve_complete_graph(capsys):
    code, out, _ = run(capsys, "solve", "--graph", "g6:C~")
    assert code == 0
    body = json.loads(out)
    assert body["value"] == 1
    assert body["optimal_first_moves"] == [0]


def test_solve_variants_on_emitted_family(capsys, tmp_path):
    target = tmp_path / "t1.txt"
    code, out, _ = run(
        capsys, "family", "T", "--r", "1", "--emit", "edges", "--output", str(target)
    )
    assert code == 0 and out == ""
    text = target.read_text()
    assert text.splitlines()[0] == "6 5"
    assert "# w=0" in text

    code, out, _ = run(capsys, "solve", "--graph", str(target))
    assert code == 0 and json.loads(out)["value"] == 3
    code, out, _ = run(capsys, "solve", "--graph", str(target), "--variant", "staller")
    assert code == 0 and json.loads(out)["value"] == 4


def test_solve_graph6_family_file(capsys, tmp_path):
    target = tmp_path / "t1.g6"
    run(capsys, "family", "T", "--r", "1", "--emit", "g6", "--output", str(target))
    code, out, _ = run(capsys, "solve", "--graph", str(target))
    assert code == 0 and json.loads(out)["value"] == 3


def test_solve_partial_fixture_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "family", "F")
    assert code == 0
    assert "# dominated=1" in out.splitlines()
    target = tmp_path / "f.txt"
    target.write_text(out)
    code, out, _ = run(capsys, "solve", "--graph", str(target), "--dominated", "1")
    assert code == 0
    body = json.loads(out)
    assert body["dominated"] == [1]
    assert body["value"] == 5


def test_solve_line_and_exact_front(capsys):
    code, out, _ = run(
        capsys, "solve", "--graph", "g6:D~{", "--exact-front", "--line"
    )
    body = json.loads(out)
    assert code == 0
    assert len(body["trace"]) == body["value"]
    assert body["optimal_first_moves"]


# ---------------------------------------------------------------------------
# family


def test_family_json_format_flag_anywhere(capsys):
    code, before, _ = run(capsys, "--format", "json", "family", "T", "--r", "1")
    assert code == 0
    code, after, _ = run(capsys, "family", "T", "--r", "1", "--format", "json")
    assert code == 0
    assert before == after
    body = json.loads(before)
    assert body["kind"] == "tree" and body["order"] == 6


def test_family_graph6_format(capsys):
    code, out, _ = run(capsys, "family", "T", "--r", "1", "--format", "graph6")
    assert code == 0
    first = out.splitlines()[0]
    assert first == "EXOO"  # graph6 of the r=1 tree


def test_family_pair_side_selection(capsys):
    code, g_out, _ = run(capsys, "family", "fig6", "--which", "G")
    assert code == 0 and g_out.splitlines()[0] == "8 10"
    code, h_out, _ = run(capsys, "family", "fig6", "--which", "H")
    assert code == 0 and h_out.splitlines()[0] == "8 7"


def test_family_csv_rejected(capsys):
    code, _, err = run(capsys, "family", "T", "--r", "1", "--format", "csv")
    assert code == 2
    assert "csv" in err


def test_family_bad_params(capsys):
    code, _, err = run(capsys, "family", "T", "--m", "2")
    assert code == 2
    assert "error (contract)" in err


# ---------------------------------------------------------------------------
# census


def test_census_stdout_jsonl(capsys):
    code, out, err = run(capsys, "census", "--max-n", "4")
    assert code == 0
    expected = [r.json_line() for n in range(1, 5) for r in pair_census(n)]
    assert out.splitlines() == expected
    assert err == ""


def test_census_csv(capsys):
    code, out, _ = run(capsys, "census", "--max-n", "4", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,gg,ggp,count,witnesses"
    assert len(lines) == 1 + 5
    assert lines[-2] == "4,1,2,1,Cs"
    assert lines[-1] == "4,2,2,1,Ck"


def test_census_out_and_resume(capsys, tmp_path):
    out_file = tmp_path / "census.jsonl"
    code, _, err = run(capsys, "census", "--max-n", "4", "--out", str(out_file))
    assert code == 0
    assert "n=4: 2 trees, 2 value pairs" in err
    manifest = tmp_path / "census.jsonl.manifest"
    assert manifest.read_text() == "1\n2\n3\n4\n"

    code, _, err = run(
        capsys, "census", "--max-n", "6", "--out", str(out_file), "--resume"
    )
    assert code == 0
    assert "n=4" not in err and "n=6" in err
    resumed = out_file.read_bytes()
    manifest_after = manifest.read_text()

    fresh_file = tmp_path / "fresh.jsonl"
    code, _, _ = run(capsys, "census", "--max-n", "6", "--out", str(fresh_file))
    assert code == 0
    assert fresh_file.read_bytes() == resumed
    assert manifest_after == "1\n2\n3\n4\n5\n6\n"


def test_census_rerun_without_resume_truncates(capsys, tmp_path):
    out_file = tmp_path / "census.jsonl"
    run(capsys, "census", "--max-n", "5", "--out", str(out_file))
    first = out_file.read_bytes()
    run(capsys, "census", "--max-n", "5", "--out", str(out_file))
    assert out_file.read_bytes() == first


def test_census_usage_errors(capsys, tmp_path):
    code, _, err = run(capsys, "census", "--max-n", "4", "--resume")
    assert code == 2 and "--out" in err
    code, _, err = run(
        capsys, "census", "--max-n", "4", "--out", str(tmp_path / "x"), "--format", "csv"
    )
    assert code == 2 and "csv" in err


def test_census_guard_exit(capsys, tmp_path):
    # resume from a manifest claiming 1..16 so only the guarded order runs
    out_file = tmp_path / "census.jsonl"
    out_file.write_text("")
    (tmp_path / "census.jsonl.manifest").write_text(
        "".join(f"{n}\n" for n in range(1, 17))
    )
    code, _, err = run(
        capsys, "census", "--max-n", "17", "--out", str(out_file), "--resume"
    )
    assert code == 3
    assert "error (guard)" in err


# ---------------------------------------------------------------------------
# spanning


def test_spanning_graph(capsys):
    code, out, _ = run(capsys, "spanning", "--graph", "g6:C~")
    assert code == 0
    body = json.loads(out)
    assert body["report"]["tree_count"] == 16


def test_spanning_pair_family(capsys):
    code, out, _ = run(capsys, "spanning", "--pair-family", "fig6")
    assert code == 0
    body = json.loads(out)
    assert body["report"]["min_tree"]["value"] == 3
    assert body["pair"]["all_ok"] is True


def test_spanning_source_xor(capsys):
    code, _, err = run(capsys, "spanning")
    assert code == 2 and "exactly one" in err
    code, _, err = run(
        capsys, "spanning", "--graph", "g6:C~", "--pair-family", "fig6"
    )
    assert code == 2 and "exactly one" in err


# ---------------------------------------------------------------------------
# verify


def test_verify_suite_passes(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "thm2", "--n-max", "7", "--seed", "1"
    )
    assert code == 0
    assert out.startswith("PASS thm2:")


def test_verify_repeat_is_byte_identical(capsys):
    args = ("verify", "--suite", "thm1,pairs", "--n-max", "5", "--seed", "9")
    code_a, out_a, _ = run(capsys, *args)
    code_b, out_b, _ = run(capsys, *args)
    assert code_a == code_b == 0
    assert out_a == out_b
    assert out_a.splitlines()[0].startswith("PASS thm1:")


def test_verify_json_format(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "pairs", "--n-max", "6", "--format", "json"
    )
    assert code == 0
    body = json.loads(out)
    assert body["all_passed"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    def fake(*args, **kwargs):
        return VerifyReport(
            n_max=3,
            seed=1,
            samples=5,
            clauses=(ClauseResult("thm1", False, 4, failures=("g6:Bw mover=D",)),),
        )

    monkeypatch.setattr("domgame.service.run_suites", fake)
    code, out, _ = run(capsys, "verify", "--suite", "thm1", "--n-max", "3")
    assert code == 1
    assert out.splitlines() == ["FAIL thm1: 4 checks", "  g6:Bw mover=D"]


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "thm9")
    assert code == 2
    assert "unknown suite" in err


# ---------------------------------------------------------------------------
# shared plumbing


def test_missing_graph_file(capsys):
    code, _, err = run(capsys, "solve", "--graph", "/no/such/file.txt")
    assert code == 2
    assert "not found" in err


def test_malformed_graph6_maps_to_usage(capsys):
    code, _, err = run(capsys, "solve", "--graph", "g6:C")
    assert code == 2
    assert "error (format)" in err


def test_dominated_out_of_range(capsys):
    code, _, err = run(capsys, "solve", "--graph", "g6:C~", "--dominated", "9")
    assert code == 2
    assert "error (contract)" in err


def test_dominated_not_integers(capsys):
    code, _, err = run(capsys, "solve", "--graph", "g6:C~", "--dominated", "a,b")
    assert code == 2
    assert "comma-separated" in err


def test_unknown_subcommand_usage_exit(capsys):
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
    capsys.readouterr()


def test_output_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "result.json"
    code, out, _ = run(
        capsys, "--output", str(target), "solve", "--graph", "g6:C~"
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["value"] == 1


def test_unreachable_server_is_transport_failure(capsys):
    code, _, err = run(
        capsys, "--server", "http://127.0.0.1:9", "solve", "--graph", "g6:C~"
    )
    assert code == 1
    assert "transport error" in err
