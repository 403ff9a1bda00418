import json

import pytest
from click.testing import CliRunner

from src.cli import cli


@pytest.fixture
def run(data_dir):
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, [str(a) for a in args])

    return invoke


def test_ct_validate(run, data_dir):
    result = run("ct", "validate", data_dir / "s3.ct")
    assert result.exit_code == 0
    assert "[OK] all checks pass" in result.stdout


def test_ct_validate_json(run, data_dir):
    result = run("ct", "validate", data_dir / "a5.ct", "--format", "json")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["ok"] is True


def test_ct_validate_broken_table_exits_1(run, data_dir, tmp_path):
    broken = tmp_path / "s3.ct"
    broken.write_text((data_dir / "s3.ct").read_text().replace("IRR 2 : 2 0 -1", "IRR 2 : 2 1 -1"))
    result = run("ct", "validate", broken)
    assert result.exit_code == 1
    assert "row_orthogonality" in result.stdout


def test_ct_syntax_error_exits_2(run, tmp_path):
    bad = tmp_path / "bad.ct"
    bad.write_text("GROUP X\nORDER 2\n")
    result = run("ct", "validate", bad)
    assert result.exit_code == 2
    assert result.stderr.startswith("[FAIL]")


def test_missing_file_exits_2(run, tmp_path):
    result = run("ct", "validate", tmp_path / "nothing.ct")
    assert result.exit_code == 2


def test_non_utf8_table_exits_2(run, tmp_path):
    bad = tmp_path / "bad.ct"
    bad.write_bytes(b"\xff\xfe")
    result = run("ct", "validate", bad)
    assert result.exit_code == 2
    assert result.stderr.startswith("[FAIL]")
    assert "not UTF-8" in result.stderr


def test_non_utf8_fusion_exits_2(run, data_dir, tmp_path):
    bad = tmp_path / "bad.fus"
    bad.write_bytes(b"FUSION \xff\n")
    result = run("ct", "restrict", data_dir / "a5.ct", data_dir / "s3.ct", bad, "--char", "4")
    assert result.exit_code == 2
    assert "not UTF-8" in result.stderr


def test_non_utf8_gens_exits_2(run, tmp_path):
    bad = tmp_path / "bad.gens"
    bad.write_bytes(b"DEGREE 3\nGEN (1,2\xe9)\n")
    result = run("pg", "order", bad)
    assert result.exit_code == 2
    assert "not UTF-8" in result.stderr


def test_ct_decompose(run, data_dir):
    result = run("ct", "decompose", data_dir / "th.ct", "--sum", "30875,4123,1", "--format", "json")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["parts"] == {"1": 1, "4123": 1, "30875": 1}


def test_ct_decompose_needs_one_source(run, data_dir):
    assert run("ct", "decompose", data_dir / "s3.ct").exit_code == 2
    assert run("ct", "decompose", data_dir / "s3.ct", "--char", "2", "--sum", "1+,1-").exit_code == 2


def test_ct_value_sums_rows(run, data_dir):
    result = run("ct", "value", data_dir / "th_partial.ct", "--char", "61256,4123,248,1", "--class", "7A")
    assert result.exit_code == 0
    assert result.stdout.strip() == "17"


def test_ct_value_unknown_class(run, data_dir):
    result = run("ct", "value", data_dir / "s3.ct", "--char", "2", "--class", "5A")
    assert result.exit_code == 2


def test_ct_product(run, data_dir, tmp_path):
    out = tmp_path / "s3xth.ct"
    result = run("ct", "product", data_dir / "s3.ct", data_dir / "th_partial.ct", "-o", out)
    assert result.exit_code == 0
    text = out.read_text()
    assert "PARTIAL" in text
    assert "CLASS 3A,9A ORDER=9" in text


def test_ct_restrict(run, data_dir):
    result = run("ct", "restrict", data_dir / "a5.ct", data_dir / "s3.ct", data_dir / "s3_a5.fus", "--char", "4")
    assert result.exit_code == 0
    assert "= 1+ + 1- + 2" in result.stdout


def test_ct_cmc(run, data_dir):
    result = run("ct", "cmc", data_dir / "s3.ct", "2A", "2A", "3A")
    assert result.exit_code == 0
    assert result.stdout.strip() == "3"


def test_ct_cmc_partial_table(run, data_dir):
    assert run("ct", "cmc", data_dir / "th_partial.ct", "2A", "2A", "9A").exit_code == 2


def test_ct_serialize(run, data_dir):
    result = run("ct", "serialize", data_dir / "s3.ct")
    assert result.exit_code == 0
    assert "IRR 1- : 1 -1 1" in result.stdout


def test_pg_order(run, data_dir):
    result = run("pg", "order", data_dir / "psl28.gens", "--format", "json")
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"order": 504, "degree": 9}


def test_pg_classes(run, data_dir):
    result = run("pg", "classes", data_dir / "a5.gens", "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["complete"] is True
    assert sorted(c["size"] for c in payload["classes"]) == [1, 12, 12, 15, 20]


def test_pg_centralizer(run, data_dir):
    result = run("pg", "centralizer", data_dir / "a5.gens", "--elt", "(1,2,3)")
    assert result.exit_code == 0
    assert result.stdout.strip() == "3"


def test_pg_centralizer_outside_group(run, data_dir):
    assert run("pg", "centralizer", data_dir / "a5.gens", "--elt", "(1,2)").exit_code == 2


def test_pg_conjugate(run, data_dir):
    result = run("pg", "conjugate", data_dir / "a5.gens", "--x", "(1,2,3,4,5)", "--y", "(1,3,5,2,4)", "--format", "json")
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"conjugate": False, "witness": None}


def test_pg_budget_exhaustion_exits_3(run, data_dir):
    result = run("pg", "conjugate", data_dir / "a5.gens", "--x", "(1,2,3)", "--y", "(2,4,5)", "--budget", "1")
    assert result.exit_code == 3
    assert "budget=1" in result.stderr


def test_pg_rejects_nonpositive_budget(run, data_dir):
    assert run("pg", "order", data_dir / "a5.gens", "--budget", "0").exit_code == 2


def test_pg_subgroups(run, data_dir):
    result = run("pg", "subgroups", data_dir / "a5.gens", "--min-order", "14", "--format", "json")
    assert [s["order"] for s in json.loads(result.stdout)["subgroups"]] == [60]


def test_pg_sylow3(run, data_dir):
    result = run("pg", "sylow3", data_dir / "psl28.gens", "--format", "json")
    assert json.loads(result.stdout)["order"] == 9


def test_pg_c9census(run, data_dir):
    result = run("pg", "c9census", data_dir / "psl28.gens", "--format", "json")
    assert json.loads(result.stdout)["verdict"] == "all conjugate"


def test_pg_d18census(run, data_dir, tmp_path):
    c9 = tmp_path / "c9.gens"
    c9.write_text("DEGREE 9\nGEN (1,2,3,4,5,6,7,8,9)\n")
    result = run("pg", "d18census", data_dir / "d18.gens", "--c9", c9, "--format", "json")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["count"] == 1


def test_pg_census(run, data_dir):
    result = run("pg", "census", data_dir / "c9xc3.gens", "--format", "json")
    payload = json.loads(result.stdout)
    assert (payload["c9_count"], payload["c3_count"], payload["complement_count"]) == (3, 4, 3)


def test_pg_bad_gens_exit_2(run, tmp_path):
    bad = tmp_path / "bad.gens"
    bad.write_text("DEGREE 3\nGEN (1,2,2)\n")
    result = run("pg", "order", bad)
    assert result.exit_code == 2
    assert "line 2" in result.stderr


def test_verify_subset(run, data_dir):
    result = run("verify", "--data", data_dir, "--only", "R1,R2,C1", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["overall"] == "pass"
    assert [s["id"] for s in payload["steps"]] == ["R1", "R2", "C1"]


def test_verify_text(run, data_dir):
    result = run("verify", "--data", data_dir, "--only", "C2")
    assert result.exit_code == 0
    assert "[OK] C2" in result.stdout
    assert "overall: pass" in result.stdout


def test_verify_unknown_step(run, data_dir):
    assert run("verify", "--data", data_dir, "--only", "Q7").exit_code == 2


def test_verify_missing_data(run, tmp_path):
    result = run("verify", "--data", tmp_path)
    assert result.exit_code == 2
    assert "missing mandatory data" in result.stderr


def test_verify_failure_exits_1(run, data_dir, tmp_path):
    for name in ("s3.ct", "a5.gens", "psl28.gens"):
        (tmp_path / name).write_text((data_dir / name).read_text())
    th = (data_dir / "th_partial.ct").read_text().replace("IRR 30875 : 30875 155", "IRR 30875 : 30875 156")
    (tmp_path / "th_partial.ct").write_text(th)
    result = run("verify", "--data", tmp_path, "--only", "R2")
    assert result.exit_code == 1
    assert "34999" in result.stdout


def test_verify_json_is_deterministic(run, data_dir):
    args = ("verify", "--data", data_dir, "--only", "R1,R2,R4,C1,C2,P1,F1,S1", "--seed", "5", "--format", "json")
    first, second = run(*args), run(*args)
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout


@pytest.mark.slow
def test_full_verify_json_is_deterministic(run, data_dir):
    first = run("verify", "--data", data_dir, "--format", "json")
    second = run("verify", "--data", data_dir, "--format", "json")
    assert first.exit_code == 0
    assert first.stdout == second.stdout
