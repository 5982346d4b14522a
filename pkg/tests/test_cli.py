"""End-to-end tests for the command-line interface."""

import json

from closurelab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_order(capsys):
    code, out, _ = run(capsys, "order", "--catalog", "A5")
    assert code == 0
    assert out == "order 60\n"


def test_order_from_generator_file(tmp_path, capsys):
    path = tmp_path / "grp.txt"
    path.write_text("degree 5\n(1 2 3 4 5)\n(1 2 3)\n")
    code, out, _ = run(capsys, "order", "--group-file", str(path))
    assert code == 0
    assert out == "order 60\n"


def test_closure_command(capsys):
    code, out, _ = run(capsys, "closure", "--catalog", "A5", "--k", "4")
    assert code == 0
    assert "order 60" in out
    assert "gen" in out


def test_spectrum_json(capsys):
    code, out, _ = run(capsys, "spectrum", "--catalog", "A5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "spectrum"
    assert payload["group"] == {"name": "A5", "degree": 5, "order": 60}
    assert payload["result"]["minimal_k"] == 4
    assert [e["order"] for e in payload["result"]["entries"]] == [120, 120, 120, 60]
    assert payload["budget"]["elapsed_ms"] == 0


def test_json_output_is_byte_identical_across_runs(capsys):
    _, first, _ = run(capsys, "spectrum", "--catalog", "A6", "--json")
    _, second, _ = run(capsys, "spectrum", "--catalog", "A6", "--json")
    assert first == second


def test_base_command(capsys):
    code, out, _ = run(capsys, "base", "--catalog", "M11")
    assert code == 0
    assert "size 4" in out
    assert "exhaustive yes" in out


def test_base_greedy_flag(capsys):
    code, out, _ = run(capsys, "base", "--catalog", "S6", "--greedy")
    assert code == 0
    assert "size 5" in out


def test_base_csv(capsys):
    code, out, _ = run(capsys, "base", "--catalog", "S6", "--action", "ksubsets:2", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "group,action,b,exhaustive,witness"
    assert lines[1].startswith("S6,ksubsets(2),4,True")


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--catalog", "D4", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "group,action,k,order,error"
    assert lines[1] == "D4,catalog(D4),1,24,"
    assert lines[2] == "D4,catalog(D4),2,8,"


def test_orbits_and_blocks(capsys):
    code, out, _ = run(capsys, "orbits", "--catalog", "A5")
    assert code == 0
    assert "1 orbit(s)" in out
    code, out, _ = run(capsys, "blocks", "--catalog", "D4")
    assert code == 0
    assert "1 maximal system(s)" in out


def test_primitive(capsys):
    code, out, _ = run(capsys, "primitive", "--catalog", "A5")
    assert (code, out) == (0, "primitive\n")
    code, out, _ = run(capsys, "primitive", "--catalog", "D4")
    assert (code, out) == (0, "imprimitive\n")


def test_action_specs(capsys):
    code, out, _ = run(capsys, "order", "--catalog", "S4", "--action", "ksubsets:2")
    assert (code, out) == (0, "order 24\n")
    code, out, _ = run(capsys, "base", "--catalog", "S6", "--action", "partitions:2x3")
    assert code == 0
    assert "size 4" in out


def test_cosets_action(tmp_path, capsys):
    grp = tmp_path / "g.txt"
    grp.write_text("degree 5\n(1 2 3 4 5)\n(1 2 3)\n")
    sub = tmp_path / "h.txt"
    sub.write_text("degree 5\n(2 3 4)\n(2 3)(4 5)\n")
    code, out, _ = run(capsys, "order", "--group-file", str(grp),
                       "--action", f"cosets:{sub}")
    assert (code, out) == (0, "order 60\n")


def test_projective_requires_psl(capsys):
    code, _, err = run(capsys, "order", "--catalog", "A5", "--action", "projective")
    assert code == 1
    assert "projective" in err
    code, out, _ = run(capsys, "order", "--catalog", "PSL(3,2)", "--action", "projective")
    assert (code, out) == (0, "order 168\n")


def test_ktrans_command(capsys):
    code, out, _ = run(capsys, "ktrans", "--catalog", "A5", "--max-degree", "12")
    assert code == 0
    assert out.splitlines()[0] == "k 4"
    assert "certified yes" in out


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "partition-bases")
    assert code == 0
    assert "suite partition-bases: pass" in out
    assert "[pass]" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "psl-bases", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["passed"] is True
    assert all(c["elapsed_ms"] == 0 for c in payload["result"]["claims"])


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 1
    assert "unknown suite" in err


def test_verify_long_gate(capsys, monkeypatch):
    monkeypatch.delenv("CLOSURELAB_ALLOW_LONG", raising=False)
    code, _, err = run(capsys, "verify", "--suite", "m24-base")
    assert code == 1
    assert "--allow-long" in err
    code, out, _ = run(capsys, "verify", "--suite", "m24-base", "--allow-long")
    assert code == 0
    assert "suite m24-base: pass" in out


def test_budget_exhaustion_exit_code(capsys):
    code, _, err = run(capsys, "closure", "--catalog", "A5", "--k", "4",
                       "--budget-nodes", "2")
    assert code == 3
    assert "budget exceeded" in err


def test_usage_errors_exit_one(capsys):
    assert run(capsys, "order", "--bogus")[0] == 1
    assert run(capsys, "order")[0] == 1
    assert run(capsys, "order", "--catalog", "A5", "--catalog2")[0] == 1


def test_missing_group_reports_error(capsys):
    code, _, err = run(capsys, "closure", "--k", "2")
    assert code == 1
    assert "group is required" in err


def test_both_group_sources_rejected(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("degree 3\n(1 2 3)\n")
    code, _, err = run(capsys, "order", "--catalog", "A5", "--group-file", str(path))
    assert code == 1
    assert "only one" in err


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "closure", "--help")[0] == 0


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "--list")
    assert code == 0
    assert "M11 M12 M22 M23 M24" in out
    assert "an-closure" in out


def test_workers_flag_is_accepted_with_note(capsys):
    code, out, err = run(capsys, "order", "--catalog", "A5", "--workers", "4")
    assert (code, out) == (0, "order 60\n")
    assert "single-worker" in err


def test_unknown_action_spec(capsys):
    code, _, err = run(capsys, "order", "--catalog", "A5", "--action", "mystery")
    assert code == 1
    assert "mystery" in err
