"""Tests for the command-line frontend, driven in-process via main()."""

import csv
import io
import json

from serrewt.cli import main

TRES5 = '{"p":5,"type":"reducible","twist":0,"ratio":1,"shape":"tres","lambda_equal":true}'
EX23 = '{"p":5,"type":"reducible","twist":0,"ratio":1,"shape":"split","lambda_equal":false}'


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# decompose


def test_decompose_csv(capsys):
    code, out, _ = run(capsys, "decompose", "-p", "5", "-N", "5", "--format", "csv")
    assert code == 0
    assert out == "0,2,1\n1,4,1\n"


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "-p", "3", "-N", "4", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert len(obj) == 3
    assert obj == sorted(obj, key=lambda o: (o["a"], o["b"]))


def test_decompose_table_with_dimension_check(capsys):
    code, out, _ = run(capsys, "decompose", "-p", "7", "-N", "0")
    assert code == 0
    assert "V(0,1) x 1" in out
    assert "[ok]" in out


def test_decompose_usage_errors(capsys):
    assert run(capsys, "decompose", "-p", "4", "-N", "1")[0] == 2
    assert run(capsys, "decompose", "-p", "5", "-N", "-1")[0] == 2
    assert run(capsys, "decompose", "-p", "5")[0] == 2  # missing -N


# ---------------------------------------------------------------------------
# kmin


def test_kmin_plain(capsys):
    code, out, _ = run(capsys, "kmin", "-p", "5", "-a", "1", "-b", "2")
    assert (code, out.strip()) == (0, "9")
    code, out, _ = run(capsys, "kmin", "-p", "5", "-a", "0", "-b", "4")
    assert (code, out.strip()) == (0, "5")


def test_kmin_search(capsys):
    code, out, _ = run(capsys, "kmin", "-p", "3", "-a", "1", "-b", "3", "--search")
    assert code == 0
    assert out.strip() == "8, 8, match"


def test_kmin_json(capsys):
    code, out, _ = run(capsys, "kmin", "-p", "5", "-a", "1", "-b", "2",
                       "--format", "json", "--search")
    obj = json.loads(out)
    assert obj == {"p": 5, "a": 1, "b": 2, "k_min": 9, "k_min_search": 9, "match": True}


def test_kmin_out_of_range(capsys):
    assert run(capsys, "kmin", "-p", "5", "-a", "4", "-b", "2")[0] == 2
    assert run(capsys, "kmin", "-p", "5", "-a", "0", "-b", "6")[0] == 2


# ---------------------------------------------------------------------------
# weights


def test_weights_tres(capsys):
    code, out, _ = run(capsys, "weights", TRES5)
    assert code == 0
    assert "k_serre: 6" in out and "k_min:   6" in out and "k_cris:  6" in out


def test_weights_example_2_3(capsys):
    code, out, _ = run(capsys, "weights", EX23, "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["k_serre"] == obj["k_min"] == obj["k_cris"] == 2


def test_weights_irreducible(capsys):
    code, out, _ = run(
        capsys, "weights", '{"p":5,"type":"irreducible","a":0,"b":3}', "--format", "json"
    )
    obj = json.loads(out)
    assert obj["k_serre"] == obj["k_min"] == obj["k_cris"] == 4
    assert obj["W"] == obj["B"]


def test_weights_schema_violation(capsys):
    bad = '{"p":5,"type":"reducible","twist":0,"ratio":2,"shape":"tres","lambda_equal":true}'
    code, _, err = run(capsys, "weights", bad)
    assert code == 2
    assert "error" in err


def test_weights_round_trip_param(capsys):
    code, out, _ = run(capsys, "weights", TRES5, "--format", "json")
    obj = json.loads(out)
    assert json.dumps(obj["param"]) == json.dumps(json.loads(TRES5))


# ---------------------------------------------------------------------------
# verify


def test_verify_single_prime(capsys):
    code, out, _ = run(capsys, "verify", "-p", "5", "--checks", "main")
    assert code == 0
    assert "PASS" in out and "all checks passed" in out


def test_verify_rejects_two(capsys):
    code, _, err = run(capsys, "verify", "-p", "2")
    assert code == 2
    code, _, err = run(capsys, "verify", "-p", "2..5")
    assert code == 2


def test_verify_malformed_range(capsys):
    assert run(capsys, "verify", "-p", "abc")[0] == 2
    assert run(capsys, "verify", "-p", "9..3")[0] == 2
    assert run(capsys, "verify", "-p", "9")[0] == 2


def test_verify_jobs_deterministic_json(capsys):
    code1, out1, _ = run(capsys, "verify", "-p", "5", "--checks", "main,bm",
                         "--jobs", "1", "--format", "json")
    code4, out4, _ = run(capsys, "verify", "-p", "5", "--checks", "main,bm",
                         "--jobs", "4", "--format", "json")
    assert code1 == code4 == 0

    def strip(text):
        obj = json.loads(text)
        for r in obj["runs"]:
            r["ms"] = 0
        return json.dumps(obj)

    assert strip(out1) == strip(out4)


def test_verify_range_parses_inclusive(capsys):
    code, out, _ = run(capsys, "verify", "-p", "3..7", "--checks", "bm", "--format", "csv")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert [r[0] for r in rows] == ["3", "5", "7"]
    assert all(r[3] == "0" for r in rows)  # zero failures


def test_verify_brauer_needs_explicit_and_capped(capsys):
    code, out, _ = run(capsys, "verify", "-p", "3", "--checks", "brauer",
                       "--brauer-n-max", "12", "--format", "csv")
    assert code == 0
    assert out.strip().split(",")[1] == "brauer"
    code, _, err = run(capsys, "verify", "-p", "37", "--checks", "brauer")
    assert code == 2


def test_verify_unknown_check(capsys):
    assert run(capsys, "verify", "-p", "5", "--checks", "nope")[0] == 2


# ---------------------------------------------------------------------------
# table


def test_table_p3(capsys):
    code, out, _ = run(capsys, "table", "-p", "3", "--format", "csv")
    assert code == 0
    reader = list(csv.reader(io.StringIO(out)))
    header, rows = reader[0], reader[1:]
    assert len(rows) == 21
    k_equal = header.index("k_equal")
    sets_equal = header.index("sets_equal")
    n_weights = header.index("n_weights")
    shape = header.index("shape")
    for cells in rows:
        assert cells[k_equal] == "True"
        assert cells[sets_equal] == "True"
        if cells[shape] == "tres":
            assert cells[n_weights] == "1"


def test_table_row_order_matches_enumeration(capsys):
    code, out, _ = run(capsys, "table", "-p", "3", "--format", "json")
    rows = json.loads(out)
    assert [r["type"] for r in rows[:3]] == ["irreducible"] * 3
    assert rows[3]["type"] == "reducible"


def test_table_out_file(tmp_path, capsys):
    target = tmp_path / "t.csv"
    code, out, _ = run(capsys, "table", "-p", "3", "--format", "csv", "--out", str(target))
    assert code == 0
    assert out == ""
    assert len(target.read_text().strip().splitlines()) == 22


def test_table_unwritable_path(capsys):
    code, _, err = run(capsys, "table", "-p", "3", "--out", "/nonexistent/dir/t.csv")
    assert code == 2


def test_output_deterministic(capsys):
    a = run(capsys, "table", "-p", "5", "--format", "csv")
    b = run(capsys, "table", "-p", "5", "--format", "csv")
    assert a == b


# ---------------------------------------------------------------------------
# environment variables


def test_max_p_env_sets_default_range(capsys, monkeypatch):
    monkeypatch.setenv("SERREWT_MAX_P", "7")
    code, out, _ = run(capsys, "verify", "--checks", "bm", "--format", "csv")
    assert code == 0
    primes = [row.split(",")[0] for row in out.strip().splitlines()]
    assert primes == ["3", "5", "7"]


def test_jobs_env_is_accepted(capsys, monkeypatch):
    monkeypatch.setenv("SERREWT_JOBS", "2")
    code, out, _ = run(capsys, "verify", "-p", "5", "--checks", "main")
    assert code == 0
    assert "PASS" in out


def test_bad_env_value_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("SERREWT_MAX_P", "many")
    code, _, err = run(capsys, "verify", "--checks", "main")
    assert code == 2
