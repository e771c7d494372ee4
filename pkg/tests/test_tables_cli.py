import json

import pytest

from multfree import tables as T
from multfree.cli import EXIT_INFEASIBLE, EXIT_NOT_MF, EXIT_OK, EXIT_PARSE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decompose_and_check(capsys):
    code, out, _ = run(capsys, "decompose", "named:M12")
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == 8
    code, out, _ = run(capsys, "decompose", "alt(prod(S2,S2))")
    assert "[2,2]: 2" in out.splitlines()
    code, out, _ = run(capsys, "check", "named:AGL(1,5)")
    assert code == EXIT_OK
    assert out.splitlines() == ["multiplicity free: yes", "rank: 2", "index: 6"]
    code, out, _ = run(capsys, "check", "wr(S2,A5)")
    assert code == EXIT_NOT_MF
    code, out, _ = run(capsys, "check", "SD(4)")
    assert "rank: 18" in out and "index: 23100" in out


def test_json_output(capsys):
    code, out, _ = run(capsys, "--format", "json", "check", "wr(S3,S2)")
    payload = json.loads(out)
    assert payload["multiplicity_free"] and payload["rank"] == 2 and payload["index"] == 10


def test_method_flag(capsys):
    code, out, _ = run(capsys, "--method", "brute", "--format", "json", "decompose", "wr(S2,S3)")
    assert json.loads(out)["provenance"] == "brute_force"
    code, _, err = run(capsys, "--method", "closed", "decompose", "SD(3)")
    assert code == EXIT_INFEASIBLE


def test_error_exits(capsys):
    code, _, err = run(capsys, "check", "wr(S3,")
    assert code == EXIT_PARSE and err.startswith("error:")
    code, _, err = run(capsys, "check", "named:M24")
    assert code == EXIT_PARSE
    code, _, err = run(capsys, "--census-cap", "100", "--method", "brute", "check", "wr(S2,S6)")
    assert code == EXIT_INFEASIBLE and "census infeasible" in err
    code, _, err = run(capsys, "table", "4", "--row", "8", "--param", "k")
    assert code == EXIT_PARSE


def test_table_command(capsys):
    code, out, _ = run(capsys, "table", "1")
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1] == "table 1: PASS 21"
    code, out, _ = run(capsys, "table", "2", "--row", "3", "--param", "l=4")
    assert code == EXIT_OK and "ERRATUM" in out


def test_qi_command(capsys, tmp_path):
    edges = tmp_path / "e.txt"
    code, out, _ = run(capsys, "qi", "--n", "9", "--k", "3", "--commute", "--clique", "--edges", str(edges))
    assert code == EXIT_OK
    assert "280 uniform partitions" in out
    assert "scheme matrices commute" in out
    assert "maximum clique: 4" in out
    assert len(edges.read_text().splitlines()) > 0
    code, out, _ = run(capsys, "qi", "--n", "9", "--k", "3", "--clique", "--budget", "1")
    assert "clique bounds" in out
    code, _, err = run(capsys, "qi", "--n", "12", "--k", "3", "--vertex-cap", "10")
    assert code == EXIT_INFEASIBLE


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "hook-sets")
    assert code == EXIT_OK and out.startswith("[hook-sets] ok")


def test_evaluate_and_params():
    assert T.evaluate("comb(2*k,k)//2", {"k": 3}) == 10
    assert T.evaluate("52+k if k>=16 else None", {"k": 3}) is None
    assert T.evaluate(None, {}) is None
    with pytest.raises(NameError):
        T.evaluate("open('x')", {})
    assert T.parse_param_override(["k=5..7"]) == [{"k": 5}, {"k": 6}, {"k": 7}]
    assert T.parse_param_override(["k=1,2", "n=9"]) == [{"k": 1, "n": 9}, {"k": 2, "n": 9}]
    assert T.expand_params({"k,n": [[1, 2], [2, 5]]}) == [{"k": 1, "n": 2}, {"k": 2, "n": 5}]
    with pytest.raises(ValueError):
        T.parse_param_override(["=3"])


def test_judge_statuses():
    m = T.Measured("x", 6, 10, 2, True, "brute")
    assert T._judge(m, {"n": 6, "index": 10, "rank": 2, "mf": True}, None)[0] == T.PASS
    assert T._judge(m, {"n": 6, "index": 10, "rank": None, "mf": True}, None)[0] == T.REPORT
    assert T._judge(m, {"n": 6, "index": 10, "rank": 3, "mf": True}, None)[0] == T.FAIL
    assert T._judge(m, {"n": 6, "index": 10, "rank": 3, "mf": True}, {"rank": 2, "note": "typo"}) == (T.ERRATUM, "typo")


def test_unknown_table():
    with pytest.raises(KeyError):
        T.run_table("9")
