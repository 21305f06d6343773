"""The end-to-end tagging pipeline: tokenize, match, resolve, normalize, number."""

from __future__ import annotations

from typing import Optional

from .lexicon import Lexicon, default_lexicon
from .normalize import ReferenceDate, normalize
from .patterns import find
from .serialize import AnnotatedDocument, assign_tids
from .tokenizer import tokenize


def tag_text(
    text: str,
    ref: Optional[ReferenceDate] = None,
    lexicon: Optional[Lexicon] = None,
    strict_case: bool = False,
) -> AnnotatedDocument:
    """Tokenize, match, resolve, normalize and number the expressions in ``text``."""
    lexicon = lexicon if lexicon is not None else default_lexicon()
    stream = tokenize(text, lexicon.suffixes)
    matches = find(stream, lexicon, strict_case)
    return assign_tids([normalize(m, ref) for m in matches], stream.source)
