"""End-to-end tests of the command-line interface and its output contracts."""

import json

from qhilb.cli import CACHE_ENV_VAR, canonical_json, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_zeta_all_methods_agree(capsys):
    code, out, _ = run(capsys, "zeta", "--p", "1", "--order", "6", "--method", "all")
    assert code == 0
    assert "1,1,2,3,5,7,11" in out
    assert "verdict: pass" in out


def test_zeta_oracle_text(capsys):
    code, out, _ = run(capsys, "zeta", "--p", "2", "--order", "3", "--method", "oracle")
    assert code == 0
    assert "1,1,3,5" in out


def test_zeta_closed_json_schema_and_round_trip(capsys):
    code, out, _ = run(
        capsys, "zeta", "--p", "2", "--order", "3", "--method", "closed",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "p": 2,
        "order": 3,
        "method": "closed",
        "coefficients": ["1", "1", "3", "5"],
    }
    assert canonical_json(payload) == out


def test_zeta_closed_usage_error(capsys):
    code, _, err = run(capsys, "zeta", "--p", "3", "--order", "2", "--method", "closed")
    assert code == 2
    assert "closed" in err


def test_zeta_csv(capsys):
    code, out, _ = run(
        capsys, "zeta", "--p", "1", "--order", "3", "--format", "csv"
    )
    assert code == 0
    assert out.splitlines() == ["m,coefficient", "0,1", "1,1", "2,2", "3,3"]


def test_missing_subcommand_is_usage_error(capsys):
    assert run(capsys, )[0] == 2
    assert run(capsys, "zeta", "--p", "1")[0] == 2  # missing --order


def test_negative_order_is_usage_error(capsys):
    code, _, err = run(capsys, "zeta", "--p", "1", "--order", "-1")
    assert code == 2
    assert "order" in err


def test_fountains_table_f(capsys):
    code, out, _ = run(capsys, "fountains", "--p", "1", "--max-n", "5", "--table", "f")
    assert code == 0
    assert "f(4,3) = 2" in out


def test_fountains_check_oracle_with_example_entry(capsys):
    code, out, _ = run(
        capsys, "fountains", "--p", "3", "--max-n", "9", "--table", "f",
        "--check-oracle", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["oracle"]["status"] == "pass"
    entry_97 = [e for e in payload["entries"] if (e["n"], e["k"]) == (9, 7)]
    assert entry_97 and int(entry_97[0]["count"]) >= 1


def test_fountains_h_table_at_zero(capsys):
    code, out, _ = run(
        capsys, "fountains", "--p", "2", "--max-n", "0", "--table", "h",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["entries"] == [{"n": 0, "k": 0, "count": "1"}]
    assert canonical_json(payload) == out


def test_fountains_csv_deterministic(capsys):
    code, first, _ = run(
        capsys, "fountains", "--p", "2", "--max-n", "6", "--format", "csv"
    )
    assert code == 0
    code, second, _ = run(
        capsys, "fountains", "--p", "2", "--max-n", "6", "--format", "csv"
    )
    assert first == second
    rows = [line.split(",") for line in first.splitlines()[1:]]
    keys = [(int(n), int(k)) for n, k, _ in rows]
    assert keys == sorted(keys)


def test_verify_order_zero_passes(capsys):
    code, out, _ = run(capsys, "verify", "--p", "1", "--order", "0")
    assert code == 0
    assert "all checks passed" in out


def test_verify_three_p_values(capsys):
    code, out, _ = run(capsys, "verify", "--p", "1,2,3", "--order", "8")
    assert code == 0
    assert "all checks passed" in out
    assert out.count("[PASS]") >= 24


def test_verify_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "verify", "--p", "1,2", "--order", "4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert canonical_json(payload) == out
    assert payload["command"] == "verify"
    assert payload["parameters"] == {"p": [1, 2], "order": 4}
    assert all(r["status"] == "pass" for r in payload["results"])
    assert isinstance(payload["elapsed_ms"], int)


def test_verify_bad_p_list(capsys):
    code, _, err = run(capsys, "verify", "--p", "1,x", "--order", "2")
    assert code == 2
    assert "invalid p list" in err


def test_identities_subcommand(capsys):
    code, out, _ = run(capsys, "identities", "--p", "1,2", "--order", "8")
    assert code == 0
    assert "ramanujan" in out
    assert "jacobi" in out
    assert "all checks passed" in out


def test_cache_dir_flag_creates_and_reuses(tmp_path, capsys):
    argv = [
        "fountains", "--p", "2", "--max-n", "5", "--format", "csv",
        "--cache-dir", str(tmp_path),
    ]
    code, first, _ = run(capsys, *argv)
    assert code == 0
    cached = list(tmp_path.glob("fountains_p2_*_v1.json"))
    assert len(cached) == 1
    code, second, _ = run(capsys, *argv)
    assert code == 0
    assert first == second


def test_cache_env_var_fallback(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path))
    code, _, _ = run(capsys, "zeta", "--p", "2", "--order", "4")
    assert code == 0
    assert list(tmp_path.glob("fountains_p2_*_v1.json"))
