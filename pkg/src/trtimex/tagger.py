"""A scikit-learn compatible estimator around the tagging pipeline."""

from __future__ import annotations

import datetime as dt
from typing import Optional

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .annotate import tag_text
from .lexicon import default_lexicon, load_lexicon
from .normalize import ReferenceDate
from .serialize import AnnotatedDocument, parse_gold, render_inline, render_standoff

OUTPUTS = ("timex", "document", "inline", "standoff")


def check_reference_date(ref) -> Optional[ReferenceDate]:
    if ref is None or isinstance(ref, ReferenceDate):
        return ref
    if isinstance(ref, dt.datetime):
        return ReferenceDate(ref.year, ref.month, ref.day, ref.time())
    if isinstance(ref, dt.date):
        return ReferenceDate.from_date(ref)
    if isinstance(ref, str):
        return ReferenceDate.parse(ref)
    raise TypeError(f"ref_date must be a date, a YYYY-MM-DD string or None, got {type(ref).__name__}")


def check_documents(X) -> list[str]:
    """Validate a collection of documents; a single string is rejected."""
    if isinstance(X, (str, bytes)):
        raise ValueError("expected a collection of documents, got a single string; wrap it in a list")
    try:
        docs = list(X)
    except TypeError:
        raise TypeError(f"expected an iterable of strings, got {type(X).__name__}") from None
    out = []
    for i, doc in enumerate(docs):
        if isinstance(doc, bytes):
            doc = doc.decode("utf-8")
        if not isinstance(doc, str):
            raise TypeError(f"document {i} is {type(doc).__name__}, not str")
        out.append(doc)
    return out


class TemporalTagger(TransformerMixin, BaseEstimator):
    """Turkish temporal expression tagger with the estimator interface.

    Parameters
    ----------
    ref_date : date, str or None
        Reference date for deictic and relative expressions.
    output : {"timex", "document", "inline", "standoff"}
        What ``transform`` returns per document: a list of ``Timex3``, an
        ``AnnotatedDocument``, inline TimeML or standoff JSON.
    lexicon_path : path or None
        Override lexicon layered over the default resource.
    strict_case : bool
        Only accept capitalized month and weekday names.

    ``fit`` learns nothing; it builds the lexicon. ``score`` takes gold
    inline documents and returns the strict F1.
    """

    def __init__(self, ref_date=None, output="timex", lexicon_path=None, strict_case=False):
        self.ref_date = ref_date
        self.output = output
        self.lexicon_path = lexicon_path
        self.strict_case = strict_case

    def fit(self, X=None, y=None):
        if self.output not in OUTPUTS:
            raise ValueError(f"output must be one of {OUTPUTS}, got {self.output!r}")
        if X is not None:
            check_documents(X)
        self.ref_date_ = check_reference_date(self.ref_date)
        if self.lexicon_path is None:
            self.lexicon_ = default_lexicon()
        else:
            self.lexicon_ = load_lexicon(overrides=self.lexicon_path)
        return self

    def _tag(self, doc: str) -> AnnotatedDocument:
        return tag_text(doc, self.ref_date_, self.lexicon_, self.strict_case)

    def predict(self, X) -> list[AnnotatedDocument]:
        check_is_fitted(self, "lexicon_")
        return [self._tag(doc) for doc in check_documents(X)]

    def transform(self, X):
        docs = self.predict(X)
        if self.output == "timex":
            return [d.timexes for d in docs]
        if self.output == "inline":
            return [render_inline(d) for d in docs]
        if self.output == "standoff":
            return [render_standoff(d) for d in docs]
        return docs

    def score(self, X, y):
        """Strict F1 of predictions on ``X`` against gold inline documents ``y``."""
        from .evaluation import evaluate

        gold = [parse_gold(g) for g in check_documents(y)]
        predicted = self.predict(X)
        if len(gold) != len(predicted):
            raise ValueError(f"X has {len(predicted)} documents but y has {len(gold)}")
        return evaluate(gold, predicted).strict.f1

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.input_tags.two_d_array = False
        tags.input_tags.string = True
        tags.requires_fit = True
        return tags
