import datetime as dt

import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from trtimex import TemporalTagger
from trtimex.serialize import AnnotatedDocument


def test_params_round_trip():
    t = TemporalTagger(ref_date="2015-03-23", output="inline")
    assert t.get_params() == {"ref_date": "2015-03-23", "output": "inline", "lexicon_path": None, "strict_case": False}
    c = clone(t)
    assert c.get_params() == t.get_params() and c is not t


def test_transform_outputs():
    docs = ["dün geldi", "her ay"]
    t = TemporalTagger(ref_date=dt.date(2015, 3, 23)).fit(docs)
    timexes = t.transform(docs)
    assert [[x.value for x in d] for d in timexes] == [["2015-03-22"], ["P1M"]]
    assert t.set_params(output="inline").transform(["dün"]) == [
        '<TIMEX3 tid="t1" type="DATE" value="2015-03-22">dün</TIMEX3>'
    ]
    assert isinstance(t.set_params(output="document").transform(["dün"])[0], AnnotatedDocument)
    assert t.set_params(output="standoff").transform(["dün"])[0].endswith("\n")


def test_not_fitted():
    with pytest.raises(NotFittedError):
        TemporalTagger().transform(["dün"])


def test_input_validation():
    t = TemporalTagger().fit()
    with pytest.raises(ValueError):
        t.transform("dün")
    with pytest.raises(TypeError):
        t.transform([1])
    with pytest.raises(ValueError):
        TemporalTagger(output="xml").fit()
    with pytest.raises(ValueError):
        TemporalTagger(ref_date="23.03.2015").fit()


def test_pipeline():
    pipe = make_pipeline(FunctionTransformer(lambda X: [x.strip() for x in X]), TemporalTagger(ref_date="2015-03-23"))
    out = pipe.fit_transform(["  yarın  "])
    assert out[0][0].value == "2015-03-24" and out[0][0].text == "yarın"


def test_score_against_gold(tables_dir):
    from trtimex.serialize import parse_gold

    gold = [p.read_text(encoding="utf-8") for p in sorted(tables_dir.glob("*.tml"))]
    texts = [parse_gold(g).text for g in gold]
    assert TemporalTagger(ref_date="2015-03-23").fit().score(texts, gold) == 1.0
