"""Rule-based extraction and TIMEX3 normalization of Turkish temporal expressions."""

from .exceptions import DefectError, GoldParseError, InputError, LexiconError, TrTimexError
from .lexicon import LexClass, Lexicon, LexiconEntry, classify, default_lexicon, load_lexicon
from .normalize import ReferenceDate, Timex3, normalize
from .patterns import RawMatch, resolve, scan
from .serialize import AnnotatedDocument, assign_tids, parse_gold, render_inline, render_standoff
from .annotate import tag_text
from .tokenizer import Token, TokenStream, tokenize

__version__ = "0.1.0"


def __getattr__(name):
    # the estimator pulls in scikit-learn, which the CLI does not need
    if name == "TemporalTagger":
        from .tagger import TemporalTagger

        return TemporalTagger
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

__all__ = [
    "AnnotatedDocument",
    "DefectError",
    "GoldParseError",
    "InputError",
    "LexClass",
    "Lexicon",
    "LexiconEntry",
    "LexiconError",
    "RawMatch",
    "ReferenceDate",
    "TemporalTagger",
    "Timex3",
    "Token",
    "TokenStream",
    "TrTimexError",
    "assign_tids",
    "classify",
    "default_lexicon",
    "load_lexicon",
    "normalize",
    "parse_gold",
    "render_inline",
    "render_standoff",
    "resolve",
    "scan",
    "tag_text",
    "tokenize",
]
