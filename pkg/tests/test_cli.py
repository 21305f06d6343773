import io
import json
import subprocess
import sys

import pytest

from trtimex.cli import main

REF = ["--ref-date", "2015-03-23"]


class _Stdin:
    def __init__(self, data: bytes):
        self.buffer = io.BytesIO(data)


def run(argv, capsys, monkeypatch, stdin=b""):
    monkeypatch.setattr(sys, "stdin", _Stdin(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_tag_inline(capsys, monkeypatch):
    code, out, _ = run(["tag"], capsys, monkeypatch, "23 Mart 2015".encode())
    assert code == 0 and 'value="2015-03-23"' in out


def test_tag_empty_input(capsys, monkeypatch):
    assert run(["tag"], capsys, monkeypatch, b"") == (0, "", "")


def test_tag_relative_with_ref(capsys, monkeypatch):
    code, out, _ = run(["tag", *REF], capsys, monkeypatch, "geçen sonbahar".encode())
    assert code == 0 and 'value="2014-FA"' in out


def test_tag_without_ref_warns(capsys, monkeypatch):
    code, out, err = run(["tag"], capsys, monkeypatch, "geçen sonbahar".encode())
    assert code == 0 and 'value="XXXX-FA"' in out and "reference date" in err


def test_tag_standoff(capsys, monkeypatch, tmp_path):
    p = tmp_path / "in.txt"
    p.write_text("Toplantı yarın.", encoding="utf-8")
    code, out, _ = run(["tag", *REF, "--format", "standoff", str(p)], capsys, monkeypatch)
    obj = json.loads(out)
    assert code == 0 and obj["timexes"][0]["value"] == "2015-03-24"


def test_unreadable_input(capsys, monkeypatch, tmp_path):
    code, _, err = run(["tag", str(tmp_path / "missing.txt")], capsys, monkeypatch)
    assert code == 2 and "cannot read" in err


def test_invalid_utf8_input(capsys, monkeypatch):
    code, _, _ = run(["tag"], capsys, monkeypatch, b"\xff\xfe")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [[], ["tag", "--format", "xml"], ["tag", "--ref-date", "2015-02-30"], ["tag", "--ref-date", "yesterday"], ["frob"]],
)
def test_bad_flags_exit_64(argv, capsys, monkeypatch):
    with pytest.raises(SystemExit) as exc:
        run(argv, capsys, monkeypatch)
    assert exc.value.code == 64
    assert "usage" in capsys.readouterr().err


def test_bad_lexicon_exit_2(capsys, monkeypatch, tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("NOPE\tx\t1\n", encoding="utf-8")
    code, _, err = run(["tag", "--lexicon", str(bad)], capsys, monkeypatch, b"dun")
    assert code == 2 and ":1" in err


def test_lexicon_override(capsys, monkeypatch, tmp_path):
    lex = tmp_path / "extra.tsv"
    lex.write_text("DEIC\tgeçen gün\t-1\n", encoding="utf-8")
    code, out, _ = run(["tag", *REF, "--lexicon", str(lex)], capsys, monkeypatch, "geçen gün".encode())
    assert 'value="2015-03-22"' in out


def test_strict_case_flag(capsys, monkeypatch):
    _, loose, _ = run(["tag"], capsys, monkeypatch, b"mart")
    _, strict, _ = run(["tag", "--strict-case"], capsys, monkeypatch, b"mart")
    assert "TIMEX3" in loose and strict == "mart"


def test_eval_tables(capsys, monkeypatch, tables_dir):
    code, out, _ = run(["eval", str(tables_dir), *REF, "--json"], capsys, monkeypatch)
    report = json.loads(out)
    assert code == 0 and report["documents"] == 20 and report["strict"]["f1"] == 1.0


def test_eval_text_report(capsys, monkeypatch, tables_dir):
    code, out, _ = run(["eval", str(tables_dir), *REF], capsys, monkeypatch)
    assert code == 0 and "documents: 20" in out


def test_eval_toy_corpus(capsys, monkeypatch, tmp_path):
    (tmp_path / "a.tml").write_text(
        '<TIMEX3 tid="t1" type="DATE" value="2015-03-22">dün</TIMEX3> ve iki gün\n', encoding="utf-8"
    )
    code, out, _ = run(["eval", str(tmp_path), *REF, "--json"], capsys, monkeypatch)
    strict = json.loads(out)["strict"]
    assert code == 0 and (strict["precision"], strict["recall"]) == (0.5, 1.0)


def test_eval_low_scores_still_exit_zero(capsys, monkeypatch, tmp_path):
    (tmp_path / "a.tml").write_text('<TIMEX3 tid="t1" type="DATE" value="1999">dün</TIMEX3>\n', encoding="utf-8")
    code, out, _ = run(["eval", str(tmp_path), *REF, "--json"], capsys, monkeypatch)
    assert code == 0 and json.loads(out)["strict"]["f1"] == 0.0


def test_eval_malformed_gold_exit_3(capsys, monkeypatch, tmp_path, tables_dir):
    for p in tables_dir.glob("date_0*.tml"):
        (tmp_path / p.name).write_bytes(p.read_bytes())
    (tmp_path / "zz_bad.tml").write_text('<TIMEX3 tid="t1" type="DATE" value="x">open\n', encoding="utf-8")
    code, out, err = run(["eval", str(tmp_path), *REF, "--json"], capsys, monkeypatch)
    assert code == 3 and "zz_bad.tml" in err
    assert json.loads(out)["documents"] == 8


def test_eval_missing_dir_exit_2(capsys, monkeypatch, tmp_path):
    code, _, _ = run(["eval", str(tmp_path / "nope")], capsys, monkeypatch)
    assert code == 2


def test_determinism(capsys, monkeypatch):
    text = "2015 yılının Mart'ının 23'ü akşam saat dokuz, her iki günde bir, yıllar.".encode()
    first = run(["tag", *REF], capsys, monkeypatch, text)
    second = run(["tag", *REF], capsys, monkeypatch, text)
    assert first == second


def test_console_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "trtimex", "tag", "--ref-date", "2015-03-23"],
        input="dün".encode(),
        capture_output=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.decode() == '<TIMEX3 tid="t1" type="DATE" value="2015-03-22">dün</TIMEX3>'
