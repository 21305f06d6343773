"""Lexical classes for Turkish temporal expressions.

The lexicon maps a Turkish-lowercased surface form to every lexical class it
belongs to, each with a canonical value used later by normalization. Numerals
and ordinals (1..2100, in digits and in words) are generated; everything else
comes from a tab-separated resource file.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Union

from .exceptions import LexiconError
from .tokenizer import turkish_lower

NUMBER_RANGE = (1, 2100)


class LexClass(enum.Enum):
    NUM = "NUM"
    ORD = "ORD"
    DAY = "DAY"
    MON = "MON"
    SEAS = "SEAS"
    D_PART = "D_PART"
    T_UNIT = "T_UNIT"
    MOD = "MOD"
    DEIC = "DEIC"
    DET = "DET"
    QUANT = "QUANT"
    SUF = "SUF"
    APST = "APST"

    @property
    def order(self) -> int:
        return _CLASS_ORDER[self]


_CLASS_ORDER = {c: i for i, c in enumerate(LexClass)}

SEASON_CODES = ("SP", "SU", "FA", "WI")
DAY_PART_CODES = ("MO", "AF", "EV", "NI", "DT")
TIME_UNITS = ("SECOND", "MINUTE", "HOUR", "DAY", "WEEK", "MONTH", "YEAR", "SEASON", "CENTURY")
PRESENT_REF = "PRESENT_REF"

# Classes whose canonical field is empty.
_VALUELESS = {LexClass.DET, LexClass.QUANT, LexClass.SUF, LexClass.APST}

Canonical = Union[int, str, None]


@dataclass(frozen=True)
class LexiconEntry:
    surface: str
    lexclass: LexClass
    canonical: Canonical = None

    def __post_init__(self):
        if not self.surface or self.surface != self.surface.strip():
            raise ValueError(f"bad surface form {self.surface!r}")

    @property
    def multi_token(self) -> bool:
        return " " in self.surface


class Lexicon:
    """Immutable surface -> entries multimap.

    A surface may belong to several classes; ``lookup`` returns them in
    ``LexClass`` declaration order.
    """

    def __init__(self, entries: Iterable[LexiconEntry] = ()):
        table: dict[str, dict[LexClass, LexiconEntry]] = {}
        for entry in entries:
            table.setdefault(entry.surface, {})[entry.lexclass] = entry
        self._table = {
            surface: tuple(sorted(by_class.values(), key=lambda e: e.lexclass.order))
            for surface, by_class in table.items()
        }
        self.suffixes = tuple(
            sorted(
                (s for s, es in self._table.items() if any(e.lexclass is LexClass.SUF for e in es)),
                key=lambda s: (-len(s), s),
            )
        )
        self.max_words = max((s.count(" ") + s.count(".") + 1 for s in self._table), default=1)
        # every prefix of a surface spanning several tokens ("yirmi üç", "23.")
        self.phrase_prefixes = frozenset(
            s[:k] for s in self._table if not s.isalnum() for k in range(1, len(s))
        )
        self.phrase_finals = frozenset(s.rsplit(" ", 1)[1] for s in self._table if " " in s)
        self._split_cache: dict[str, tuple] = {}

    def lookup(self, surface: str) -> tuple[LexiconEntry, ...]:
        return self._table.get(surface, ())

    def is_content(self, surface: str) -> bool:
        """True when ``surface`` has an entry other than SUF/APST."""
        return any(e.lexclass not in (LexClass.SUF, LexClass.APST) for e in self.lookup(surface))

    def __contains__(self, surface: str) -> bool:
        return surface in self._table

    def __iter__(self) -> Iterator[LexiconEntry]:
        for entries in self._table.values():
            yield from entries

    def __len__(self) -> int:
        return sum(len(es) for es in self._table.values())

    def classes(self) -> set[LexClass]:
        return {e.lexclass for e in self}

    def __repr__(self):
        return f"Lexicon({len(self)} entries)"


def classify(lexicon: Lexicon, form: str) -> list[tuple[LexClass, Canonical]]:
    return [(e.lexclass, e.canonical) for e in lexicon.lookup(form)]


# ---------------------------------------------------------------------------
# Numerals

_ONES = ("", "bir", "iki", "üç", "dört", "beş", "altı", "yedi", "sekiz", "dokuz")
_TENS = ("", "on", "yirmi", "otuz", "kırk", "elli", "altmış", "yetmiş", "seksen", "doksan")

_BACK = set("aıou")
_ROUNDED = set("ouöü")
_VOWELS = set("aeıioöuü")


def _check_range(lo, hi):
    if not (NUMBER_RANGE[0] <= lo <= hi <= NUMBER_RANGE[1]):
        raise ValueError(f"numeral range must satisfy 1 <= lo <= hi <= 2100, got ({lo}, {hi})")


def number_to_words(n: int) -> str:
    """Turkish cardinal for ``n`` in [1, 2100], e.g. 2015 -> "iki bin on beş"."""
    _check_range(n, n)
    words = []
    thousands, rest = divmod(n, 1000)
    if thousands:
        if thousands > 1:
            words.append(_ONES[thousands])
        words.append("bin")
    hundreds, rest = divmod(rest, 100)
    if hundreds:
        if hundreds > 1:
            words.append(_ONES[hundreds])
        words.append("yüz")
    tens, ones = divmod(rest, 10)
    if tens:
        words.append(_TENS[tens])
    if ones:
        words.append(_ONES[ones])
    return " ".join(words)


def _ordinal_word(word: str) -> str:
    # -(i)nci with four-way vowel harmony; dört softens to dörd-.
    if word == "dört":
        word = "dörd"
    last = [c for c in word if c in _VOWELS][-1]
    if last in _BACK:
        vowel = "u" if last in _ROUNDED else "ı"
    else:
        vowel = "ü" if last in _ROUNDED else "i"
    suffix = f"{vowel}nc{vowel}"
    if word[-1] in _VOWELS:
        suffix = suffix[1:]
    return word + suffix


def ordinal_to_words(n: int) -> str:
    words = number_to_words(n).split(" ")
    words[-1] = _ordinal_word(words[-1])
    return " ".join(words)


def generate_number_words(lo: int, hi: int) -> list[LexiconEntry]:
    _check_range(lo, hi)
    out = []
    for n in range(lo, hi + 1):
        out.append(LexiconEntry(number_to_words(n), LexClass.NUM, n))
        out.append(LexiconEntry(str(n), LexClass.NUM, n))
    return out


def generate_ordinals(lo: int, hi: int) -> list[LexiconEntry]:
    _check_range(lo, hi)
    out = []
    for n in range(lo, hi + 1):
        out.append(LexiconEntry(ordinal_to_words(n), LexClass.ORD, n))
        out.append(LexiconEntry(f"{n}.", LexClass.ORD, n))
    return out


def builtin_entries() -> list[LexiconEntry]:
    lo, hi = NUMBER_RANGE
    return [
        *generate_number_words(lo, hi),
        *generate_ordinals(lo, hi),
        LexiconEntry("'", LexClass.APST),
        LexiconEntry("’", LexClass.APST),
    ]


# ---------------------------------------------------------------------------
# Resource files


def _parse_canonical(lexclass: LexClass, raw: str) -> Canonical:
    if lexclass in _VALUELESS:
        if raw:
            raise ValueError(f"{lexclass.value} entries take no canonical value")
        return None
    if not raw:
        raise ValueError(f"{lexclass.value} entry needs a canonical value")
    if lexclass in (LexClass.NUM, LexClass.ORD):
        value = int(raw)
        if not NUMBER_RANGE[0] <= value <= NUMBER_RANGE[1]:
            raise ValueError(f"{value} outside [1, 2100]")
        return value
    if lexclass is LexClass.MON:
        value = int(raw)
        if not 1 <= value <= 12:
            raise ValueError(f"month {value} outside [1, 12]")
        return value
    if lexclass is LexClass.DAY:
        value = int(raw)
        if not 1 <= value <= 7:
            raise ValueError(f"weekday {value} outside [1, 7]")
        return value
    if lexclass is LexClass.MOD:
        if raw not in ("+1", "-1"):
            raise ValueError(f"modifier direction must be +1 or -1, got {raw!r}")
        return int(raw)
    if lexclass is LexClass.SEAS:
        if raw not in SEASON_CODES:
            raise ValueError(f"unknown season code {raw!r}")
        return raw
    if lexclass is LexClass.D_PART:
        if raw not in DAY_PART_CODES:
            raise ValueError(f"unknown day-part code {raw!r}")
        return raw
    if lexclass is LexClass.T_UNIT:
        if raw not in TIME_UNITS:
            raise ValueError(f"unknown time unit {raw!r}")
        return raw
    # DEIC: signed day offset or a symbolic anchor
    try:
        return int(raw)
    except ValueError:
        if not raw.replace("_", "").isalpha() or not raw.isupper():
            raise ValueError(f"bad deictic anchor {raw!r}") from None
        return raw


def read_lexicon_file(path) -> list[LexiconEntry]:
    """Parse one lexicon file. Raises LexiconError naming the offending line."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise LexiconError(f"cannot read lexicon: {exc}", path) from exc
    return parse_lexicon(text, path)


def parse_lexicon(text: str, path=None) -> list[LexiconEntry]:
    entries = []
    seen = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) == 2:
            fields.append("")
        if len(fields) != 3:
            raise LexiconError(f"expected CLASS<TAB>surface<TAB>canonical, got {line!r}", path, lineno)
        tag, surface, raw = (f.strip() for f in fields)
        try:
            lexclass = LexClass[tag]
        except KeyError:
            raise LexiconError(f"unknown lexical class {tag!r}", path, lineno) from None
        surface = " ".join(turkish_lower(surface).split())
        if not surface:
            raise LexiconError("empty surface form", path, lineno)
        try:
            canonical = _parse_canonical(lexclass, raw)
        except ValueError as exc:
            raise LexiconError(str(exc), path, lineno) from None
        key = (surface, lexclass)
        if key in seen:
            raise LexiconError(f"duplicate entry {tag} {surface!r}", path, lineno)
        seen.add(key)
        entries.append(LexiconEntry(surface, lexclass, canonical))
    return entries


def default_lexicon_path():
    return resources.files("trtimex") / "data" / "lexicon.tsv"


def load_lexicon(path=None, overrides=None) -> Lexicon:
    """Built-in numerals, then ``path`` (default resource), then ``overrides``.

    Later layers shadow earlier ones on (surface, class) collisions.
    """
    if path is None:
        base = parse_lexicon(default_lexicon_path().read_text(encoding="utf-8"), "lexicon.tsv")
    else:
        base = read_lexicon_file(path)
    layers = [builtin_entries(), base]
    if overrides is not None:
        layers.append(read_lexicon_file(overrides))
    merged: dict[tuple[str, LexClass], LexiconEntry] = {}
    for layer in layers:
        for entry in layer:
            merged[(entry.surface, entry.lexclass)] = entry
    return Lexicon(merged.values())


@functools.lru_cache(maxsize=None)
def default_lexicon() -> Lexicon:
    return load_lexicon()
