import io
import json

import pytest

from sigmafact.cli import main
from sigmafact.corpus import CorpusError, builtin_corpus, parse_corpus
from sigmafact.errors import ParseError

GOOD = """\
# two small groups
[S3]
degree = 3
generators = (1 2); (1 2 3)
order = 6

[C4]
degree = 4
generators = (1 2 3 4)
"""


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stream=out)
    return code, out.getvalue()


def test_builtin_corpus_contents():
    names = {e.name for e in builtin_corpus()}
    required = {f"C{n}" for n in range(2, 13)} | {
        "S3", "S4", "A4", "A5", "D8", "D10", "D12", "Q8", "SL(2,3)", "PSL(2,7)"}
    assert required <= names
    for e in builtin_corpus():
        assert e.build().order == e.expected_order


def test_parse_corpus():
    entries = parse_corpus(GOOD)
    assert [e.name for e in entries] == ["S3", "C4"]
    assert entries[0].line == 2 and entries[1].expected_order is None
    assert entries[1].build().order == 4


def test_corpus_errors_name_the_entry():
    bad = GOOD.replace("order = 6", "order = 7")
    with pytest.raises(CorpusError) as info:
        parse_corpus(bad)[0].build()
    assert "S3" in str(info.value) and "expected 7" in str(info.value)
    bad = GOOD.replace("(1 2 3 4)", "(1 2 3 x)")
    with pytest.raises(CorpusError) as info:
        parse_corpus(bad)[1].build()
    assert info.value.entry == "C4" and "column" in str(info.value)
    with pytest.raises(CorpusError):
        parse_corpus("[X]\ngenerators = (1 2)\n")
    with pytest.raises(ParseError):
        parse_corpus("degree = 3\n")


def test_analyze_a5():
    code, out = run("analyze", "--group", "A5", "--sigma", "2,3|5|rest")
    assert code == 0
    assert "sigma-soluble:   false" in out
    assert "order:          60" in out


def test_analyze_c6_and_psl27(tmp_path):
    code, out = run("analyze", "--group", "C6", "--sigma", "rest")
    assert code == 0 and "sigma-nilpotent: true" in out
    report = tmp_path / "a.json"
    code, out = run("analyze", "--group", "PSL27", "--sigma", "2|3,7|rest", "--out", str(report))
    assert code == 0 and "order:          168" in out and "D_{3,7}: true" in out
    data = json.loads(report.read_text())
    assert data["order"] == 168 and data["D"]["3,7"] is True


def test_analyze_inline_and_file(tmp_path):
    code, out = run("analyze", "--group", "(1 2)(3 4), (1 3)(2 4)", "--sigma", "primewise")
    assert code == 0 and "order:          4" in out
    f = tmp_path / "one.ini"
    f.write_text(GOOD.split("\n[C4]")[0])
    code, out = run("analyze", "--group", str(f))
    assert code == 0 and "group:          S3" in out


def test_input_errors_exit_2(tmp_path, capsys):
    assert run("analyze", "--group", "(1 2")[0] == 2
    assert "column" in capsys.readouterr().err
    assert run("analyze", "--group", "Nope")[0] == 2
    assert run("analyze", "--group", "S5", "--sigma", "2|3")[0] == 2
    assert run("analyze", "--group", "A4", "--sigma", "rest|2")[0] == 2
    assert run("verify", str(tmp_path / "missing.ini"))[0] == 2
    bad = tmp_path / "bad.ini"
    bad.write_text(GOOD.replace("order = 6", "order = 5"))
    assert run("verify", str(bad))[0] == 2
    assert "S3" in capsys.readouterr().err
    assert run("--lattice-threshold", "50", "analyze", "--group", "A5")[0] == 2
    assert "50" in capsys.readouterr().err


def test_verify_a5_example_partition():
    code, out = run("verify", "--group", "A5", "--sigma", "2,3|5|rest")
    assert code == 0
    assert "not applicable: G is not sigma-soluble" in out
    assert "example.A5" in out and "script passed" in out
    assert "RESULT: PASS" in out


def test_verify_max_order():
    code, out = run("verify", "--max-order", "100", "--sigma", "rest")
    assert code == 0
    assert "skipped (order 168 > 100)" in out


def test_verify_file_and_report(tmp_path):
    f = tmp_path / "c.ini"
    f.write_text(GOOD)
    report = tmp_path / "r.json"
    code, _ = run("verify", str(f), "--out", str(report))
    assert code == 0
    data = json.loads(report.read_text())
    assert data["schema"] == "sigmafact.verify/1" and data["summary"]["passed"]
    assert [c["name"] for c in data["corpus"]] == ["S3", "C4"]
    for v in data["verdicts"]:
        assert set(v) >= {"name", "group", "partition", "hypotheses_met", "conclusion_holds",
                          "witnesses", "notes"}
        if not v["hypotheses_met"] and v["kind"] != "counterexample":
            assert v["notes"]


def test_verify_failure_exit_1(monkeypatch):
    import sigmafact.cli as cli

    def broken(*a, **k):
        from sigmafact.theorems import Verdict
        return [Verdict("theorem1", "X", "rest", True, False)]
    monkeypatch.setattr(cli, "verify_group", broken)
    code, out = run("verify", "--group", "C2")
    assert code == 1 and "RESULT: FAIL" in out


def test_threads_give_identical_reports(tmp_path):
    outs = []
    for n in ("1", "3"):
        p = tmp_path / f"r{n}.json"
        code, text = run("verify", "--max-order", "24", "--threads", n, "--out", str(p))
        assert code == 0
        outs.append((text, p.read_bytes()))
    assert outs[0] == outs[1]
