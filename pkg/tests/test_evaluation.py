from hypothesis import given, strategies as st

from trtimex.evaluation import Counts, EvalReport, evaluate, score_document
from trtimex.normalize import Timex3
from trtimex.serialize import AnnotatedDocument, parse_gold
from trtimex.annotate import tag_text


def doc(text, *timexes):
    return AnnotatedDocument(text, list(timexes))


def test_identical_scores_one():
    d = tag_text("dün ve her ay", None)
    r = score_document(d, d)
    assert r.strict.f1 == r.relaxed.f1 == 1.0


def test_toy_corpus_counts():
    # one gold expression, found, plus one spurious prediction
    gold = doc("dün geldi", Timex3("DATE", "2015-03-22", 0, 3, "dün", tid="t1"))
    pred = doc(
        "dün geldi",
        Timex3("DATE", "2015-03-22", 0, 3, "dün", tid="t1"),
        Timex3("DURATION", "PXY", 4, 9, "geldi", tid="t2"),
    )
    r = score_document(gold, pred)
    assert (r.strict.tp, r.strict.fp, r.strict.fn) == (1, 1, 0)
    assert (r.strict.precision, r.strict.recall) == (0.5, 1.0)
    assert abs(r.strict.f1 - 2 / 3) < 1e-12


def test_relaxed_ignores_value_and_needs_overlap():
    gold = doc("23 Mart 2015", Timex3("DATE", "2015-03-23", 0, 12, "23 Mart 2015"))
    pred = doc("23 Mart 2015", Timex3("DATE", "XXXX-03-23", 0, 7, "23 Mart"))
    r = score_document(gold, pred)
    assert (r.strict.tp, r.relaxed.tp) == (0, 1)
    pred = doc("23 Mart 2015", Timex3("DURATION", "P1Y", 0, 7, "23 Mart"))
    assert score_document(gold, pred).relaxed.tp == 0


def test_strict_compares_set_attributes():
    g = Timex3("SET", "P1M", 0, 6, "her ay", quant="EVERY")
    p = Timex3("SET", "P1M", 0, 6, "her ay")
    assert score_document(doc("her ay", g), doc("her ay", p)).strict.tp == 0


def test_empty_counts():
    c = Counts()
    assert c.precision == c.recall == c.f1 == 0.0


def test_report_merge_and_format():
    r = evaluate([tag_text("dün")] * 3, [tag_text("dün")] * 3)
    assert r.documents == 3 and r.strict.tp == 3
    assert "ALL" in r.format() and r.as_dict()["strict"]["f1"] == 1.0


@given(st.integers(0, 50), st.integers(0, 50), st.integers(0, 50))
def test_f1_is_harmonic_mean(tp, fp, fn):
    c = Counts(tp, fp, fn)
    for x in (c.precision, c.recall, c.f1):
        assert 0.0 <= x <= 1.0
    p, r = c.precision, c.recall
    assert c.f1 == (0.0 if p + r == 0 else 2 * p * r / (p + r))


def test_self_evaluation_is_perfect(tables_dir):
    from trtimex.serialize import render_inline

    for path in sorted(tables_dir.glob("*.tml")):
        pred = tag_text(parse_gold(path.read_text(encoding="utf-8")).text)
        assert pred.timexes
        assert score_document(parse_gold(render_inline(pred)), pred).strict.f1 == 1.0
    assert EvalReport().as_dict()["documents"] == 0
