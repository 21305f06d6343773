"""Turkish-aware tokenization with byte offsets and suffix segmentation."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .exceptions import InputError

APOSTROPHES = ("'", "’")
_WORD = r"(?:[^\W_0-9]|[\u0300-\u036f])+"  # letters, non-ASCII digits, combining marks
_TOKEN_RE = re.compile(
    rf"""
    (?:[0-9]+(?:[./:][0-9]+)*|{_WORD})   # digit group with inner separators, or a word
    (?:['’]{_WORD})*                # apostrophe-separated suffixes
    |\S                                  # any other non-space character
    """,
    re.VERBOSE,
)
_LOCATIVE = frozenset(("da", "de", "ta", "te"))


def turkish_lower(text: str) -> str:
    return text.replace("İ", "i").replace("I", "ı").lower()


@dataclass(frozen=True)
class Token:
    text: str
    span: tuple[int, int]  # UTF-8 byte offsets, half-open
    char_span: tuple[int, int]
    folded: str
    stem: str
    suffixes: tuple[str, ...] = ()
    apostrophe: Optional[str] = None

    @property
    def start(self) -> int:
        return self.char_span[0]

    @property
    def end(self) -> int:
        return self.char_span[1]

    @property
    def is_capitalized(self) -> bool:
        return self.text[:1].isupper()


@dataclass(frozen=True)
class TokenStream:
    tokens: tuple[Token, ...]
    source: str = field(repr=False)

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]

    def gap(self, i: int) -> str:
        """Source text between token ``i - 1`` and token ``i``."""
        before = self.tokens[i - 1].end if i > 0 else 0
        return self.source[before:self.tokens[i].start]


def _segment(rest: str, suffixes: Sequence[str]) -> list[str]:
    # greedy, longest first; an unsegmentable tail becomes one opaque piece
    out = []
    while rest:
        for suf in suffixes:
            if rest.startswith(suf):
                out.append(suf)
                rest = rest[len(suf):]
                break
        else:
            out.append(rest)
            break
    return out


def _default_suffixes():
    from .lexicon import default_lexicon

    return default_lexicon().suffixes


def split_apostrophe(token: Token, suffixes: Optional[Sequence[str]] = None) -> tuple[str, list[str]]:
    folded = token.folded
    cut = min((folded.find(a) for a in APOSTROPHES if a in folded), default=-1)
    if cut < 0:
        return folded, []
    if suffixes is None:
        suffixes = _default_suffixes()
    return folded[:cut], _segment(folded[cut + 1:], suffixes)


def tokenize(text, suffixes: Optional[Sequence[str]] = None) -> TokenStream:
    """Split ``text`` into tokens.

    ``text`` may be ``str`` or UTF-8 ``bytes``. Whitespace is skipped, each
    punctuation character is its own token, and ``.``/``/``/``:`` between
    digits stay inside one token ("23.03.2015", "14:00").
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"input is not valid UTF-8: {exc}") from exc
    else:
        try:
            text.encode("utf-8")
        except UnicodeEncodeError as exc:
            raise InputError(f"input is not valid UTF-8: {exc}") from exc
    if suffixes is None:
        suffixes = _default_suffixes()

    tokens = []
    byte_pos = 0
    char_pos = 0
    for m in _TOKEN_RE.finditer(text):
        start, end = m.span()
        byte_pos += len(text[char_pos:start].encode("utf-8"))
        raw = m.group()
        nbytes = len(raw.encode("utf-8"))
        folded = turkish_lower(raw)
        apostrophe = None
        if raw[0] not in APOSTROPHES:
            apostrophe = next((c for c in raw if c in APOSTROPHES), None)
        tok = Token(raw, (byte_pos, byte_pos + nbytes), (start, end), folded, folded, (), apostrophe)
        if apostrophe is not None:
            stem, sufs = split_apostrophe(tok, suffixes)
            tok = Token(raw, tok.span, tok.char_span, folded, stem, tuple(sufs), apostrophe)
        tokens.append(tok)
        byte_pos += nbytes
        char_pos = end
    return TokenStream(tuple(tokens), text)


def suffix_splits(folded: str, lexicon, depth: int = 3) -> list[tuple[str, tuple[str, ...]]]:
    """All (base, suffixes) analyses of an apostrophe-free form.

    The form itself comes first with no suffixes; then every base reachable by
    removing up to ``depth`` stacked suffixes that the lexicon can classify,
    longest base first. Each base keeps its shortest suffix sequence.
    """
    cache = lexicon._split_cache
    key = (folded, depth)
    hit = cache.get(key)
    if hit is not None:
        return hit
    found: dict[str, tuple[str, ...]] = {}

    def walk(form, removed):
        if len(removed) == depth:
            return
        for suf in lexicon.suffixes:
            if len(form) > len(suf) and form.endswith(suf):
                base = form[: -len(suf)]
                sufs = (suf,) + removed
                if lexicon.is_content(base) or base in lexicon.phrase_finals:
                    old = found.get(base)
                    if old is None or (len(sufs), sufs) < (len(old), old):
                        found[base] = sufs
                walk(base, sufs)

    walk(folded, ())
    out = [(folded, ())]
    out += sorted(((b, s) for b, s in found.items() if b != folded), key=lambda bs: (-len(bs[0]), bs[0]))
    cache[key] = out
    return out


def strip_suffixes(folded: str, lexicon) -> list[str]:
    return [base for base, _ in suffix_splits(folded, lexicon)]


def is_locative(suffix: str) -> bool:
    return suffix in _LOCATIVE
