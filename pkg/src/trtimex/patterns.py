"""Pattern grammar over classified tokens.

Every position of a token stream is classified against the lexicon into
*atoms* (a lexicon phrase covering one or more tokens, with the suffixes it
carries). The seventeen expression patterns and the three auxiliary
day/month/year constructs are then matched over atoms. ``scan`` reports all
matches, overlapping ones included; ``resolve`` keeps a leftmost-longest,
non-overlapping subset.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Optional

from .lexicon import LexClass, Lexicon, default_lexicon
from .tokenizer import TokenStream, is_locative, suffix_splits

NUM, ORD, DAY, MON, SEAS = LexClass.NUM, LexClass.ORD, LexClass.DAY, LexClass.MON, LexClass.SEAS
D_PART, T_UNIT, MOD, DEIC = LexClass.D_PART, LexClass.T_UNIT, LexClass.MOD, LexClass.DEIC
DET, QUANT = LexClass.DET, LexClass.QUANT

DAY_RANGE = (1, 31)
MONTH_RANGE = (1, 12)
YEAR_RANGE = (1000, 2100)  # bare numerals read as years
HOUR_RANGE = (0, 24)

_DMY_RE = re.compile(r"([0-9]{1,2})([./])([0-9]{1,2})\2([0-9]{4})")
_CLOCK_RE = re.compile(r"([0-9]{1,2})([.:])([0-9]{2})")


@dataclass(frozen=True)
class PatternId:
    kind: str  # DATE, TIME, SET, DURATION or AUX
    number: Any  # 1..17, or DAY_EXPR / MON_EXPR / YEAR_EXPR

    def __str__(self):
        return f"{self.kind}({self.number})"


def _kind(number: int) -> str:
    if 1 <= number <= 7:
        return "DATE"
    if 8 <= number <= 12:
        return "TIME"
    if 13 <= number <= 15:
        return "SET"
    if 16 <= number <= 17:
        return "DURATION"
    raise ValueError(f"no pattern numbered {number}")


PATTERNS = {n: PatternId(_kind(n), n) for n in range(1, 18)}
DAY_EXPR = PatternId("AUX", "DAY_EXPR")
MON_EXPR = PatternId("AUX", "MON_EXPR")
YEAR_EXPR = PatternId("AUX", "YEAR_EXPR")

TYPE_PRIORITY = {"TIME": 0, "SET": 1, "DATE": 2, "DURATION": 3}


@dataclass(frozen=True)
class Binding:
    """One captured component of a match.

    ``value`` is the lexicon canonical for lexical bindings, a tuple of
    bindings for auxiliary constructs, or a nested ``RawMatch`` for the date
    and time halves of a composite time expression.
    """

    lexclass: Any  # LexClass, or a str tag such as "DAY_EXPR", "DMY", "CLOCK"
    first: int
    last: int
    value: Any
    role: str
    suffixes: tuple[str, ...] = ()

    @property
    def token_range(self) -> tuple[int, int]:
        return self.first, self.last

    def walk(self):
        """This binding and every binding nested inside it."""
        yield self
        if isinstance(self.value, tuple):
            for b in self.value:
                if isinstance(b, Binding):
                    yield from b.walk()
        elif isinstance(self.value, RawMatch):
            for b in self.value.bindings:
                yield from b.walk()


@dataclass(frozen=True)
class RawMatch:
    pattern: PatternId
    first: int  # inclusive token indices
    last: int
    bindings: tuple[Binding, ...]
    span: tuple[int, int] = field(compare=False)  # character offsets into the source
    text: str = field(compare=False)

    @property
    def token_range(self) -> tuple[int, int]:
        return self.first, self.last

    @property
    def length(self) -> int:
        return self.last - self.first + 1

    @property
    def kind(self) -> str:
        return self.pattern.kind

    def all_bindings(self):
        for b in self.bindings:
            yield from b.walk()

    def overlaps(self, other: "RawMatch") -> bool:
        return self.first <= other.last and other.first <= self.last


@dataclass(frozen=True)
class Atom:
    lexclass: LexClass
    value: Any
    start: int  # token index
    end: int  # exclusive
    suffixes: tuple[str, ...]
    apostrophe: bool
    surface: str

    @property
    def bare(self) -> bool:
        return not self.suffixes and not self.apostrophe


def token_readings(token, lexicon: Lexicon):
    """(base, suffixes, has_apostrophe) analyses of one token."""
    if token.apostrophe:
        return [(token.stem, token.suffixes, True)]
    return [(base, sufs, False) for base, sufs in suffix_splits(token.folded, lexicon)]


def _within(value, bounds) -> bool:
    return isinstance(value, int) and bounds[0] <= value <= bounds[1]


def _bind(atom: Atom, role: str) -> Binding:
    return Binding(atom.lexclass, atom.start, atom.end - 1, atom.value, role, atom.suffixes)


_EMPTY: list = []

# Classes a match of each pattern can begin with; "#" is a digit group.
_DATE_STARTS = {"#", "NUM", "ORD", "DAY", "MON", "SEAS", "MOD", "DEIC"}
_STARTS = {
    1: {"#"},
    2: {"NUM", "MON"},
    3: {"NUM"},
    4: {"NUM"},
    5: {"MON", "ORD"},
    6: {"DAY", "MON", "SEAS", "MOD"},
    7: {"DEIC"},
    8: {"#", "D_PART", "T_UNIT"},
    9: {"D_PART", "T_UNIT"},
    10: {"DAY", "D_PART"},
    11: {"DAY", "D_PART"},
    12: _DATE_STARTS,
    13: {"DET"},
    14: {"T_UNIT"},
    15: {"DET", "NUM"},
    16: {"NUM"},
    17: {"T_UNIT"},
}


class Chart:
    """A token stream with every position classified, plus memoized matching."""

    def __init__(self, stream: TokenStream, lexicon: Optional[Lexicon] = None, strict_case: bool = False):
        self.stream = stream
        self.lexicon = lexicon if lexicon is not None else default_lexicon()
        self.strict_case = strict_case
        self.n = len(stream)
        self.atoms: list[list[Atom]] = [[] for _ in range(self.n)]
        self.numeric: list[Optional[tuple]] = [None] * self.n
        self._memo: dict[int, list] = {}
        self._classify()
        self._by_class: list[dict] = []
        for atoms in self.atoms:
            index: dict = {}
            for a in atoms:
                # keyed by name: Enum.__hash__ is slow on this hot path
                index.setdefault((a.lexclass.name, False), []).append(a)
                if a.bare:
                    index.setdefault((a.lexclass.name, True), []).append(a)
            self._by_class.append(index)
        self._starts = [
            {a.lexclass.name for a in atoms} | ({"#"} if num else set())
            for atoms, num in zip(self.atoms, self.numeric)
        ]

    # -- classification ---------------------------------------------------

    def _classify(self):
        stream, lexicon = self.stream, self.lexicon
        prefixes = lexicon.phrase_prefixes
        skip = (LexClass.SUF, LexClass.APST)
        readings = [token_readings(tok, lexicon) for tok in stream]
        for i, tok in enumerate(stream):
            # digit groups may carry apostrophe suffixes like any numeral ("14:00'te")
            m = _DMY_RE.fullmatch(tok.stem)
            if m:
                self.numeric[i] = ("DMY", int(m.group(1)), int(m.group(3)), int(m.group(4)), m.group(2))
            else:
                m = _CLOCK_RE.fullmatch(tok.stem)
                if m:
                    self.numeric[i] = ("CLOCK", int(m.group(1)), int(m.group(3)), m.group(2))
            prefix = ""
            for length in range(1, lexicon.max_words + 1):
                j = i + length - 1
                if j >= self.n:
                    break
                if length > 1:
                    prev = stream[j - 1]
                    if prev.apostrophe:
                        break
                    prefix += prev.folded + ("" if stream.gap(j) == "" else " ")
                    if prefix not in prefixes:
                        break
                for base, sufs, apst in readings[j]:
                    for entry in lexicon.lookup(prefix + base):
                        if entry.lexclass in skip:
                            continue
                        if self.strict_case and entry.lexclass in (DAY, MON) and not tok.is_capitalized:
                            continue
                        self.atoms[i].append(
                            Atom(entry.lexclass, entry.canonical, i, j + 1, tuple(sufs), apst, entry.surface)
                        )

    def at(self, i: int, lexclass: LexClass, bare: bool = False) -> list[Atom]:
        if i >= self.n:
            return []
        return self._by_class[i].get((lexclass.name, bare), _EMPTY)

    def unit_at(self, i: int, unit: str) -> list[Atom]:
        return [a for a in self.at(i, T_UNIT) if a.value == unit]

    # -- auxiliary constructs --------------------------------------------

    def day_expr(self, i: int) -> list[tuple[int, Binding]]:
        out = []
        for a in self.atoms[i] if i < self.n else ():
            if a.lexclass is NUM and a.apostrophe and _within(a.value, DAY_RANGE):
                # 23'ü
                out.append((a.end, (_bind(a, "day"),)))
            elif a.lexclass in (NUM, ORD) and not a.apostrophe and a.suffixes and _within(a.value, DAY_RANGE):
                # ikisi, ikincisi
                out.append((a.end, (_bind(a, "day"),)))
            elif a.lexclass in (ORD, DAY) and a.bare:
                if a.lexclass is ORD and not _within(a.value, DAY_RANGE):
                    continue
                role = "day" if a.lexclass is ORD else "weekday"
                for g in self.unit_at(a.end, "DAY"):
                    if not g.apostrophe:
                        out.append((g.end, (_bind(a, role), _bind(g, "unit"))))
        return [(end, Binding("DAY_EXPR", i, end - 1, bs, "day_expr")) for end, bs in out]

    def mon_expr(self, i: int) -> list[tuple[int, Binding]]:
        out = []
        for a in self.atoms[i] if i < self.n else ():
            if a.lexclass is MON and a.apostrophe:
                out.append((a.end, (_bind(a, "month"),)))
            elif a.lexclass in (ORD, MON) and a.bare:
                if a.lexclass is ORD and not _within(a.value, MONTH_RANGE):
                    continue
                for g in self.unit_at(a.end, "MONTH"):
                    if not g.apostrophe:
                        out.append((g.end, (_bind(a, "month"), _bind(g, "unit"))))
        return [(end, Binding("MON_EXPR", i, end - 1, bs, "mon_expr")) for end, bs in out]

    def year_expr(self, i: int) -> list[tuple[int, Binding]]:
        out = []
        for a in self.at(i, NUM, bare=True):
            if _within(a.value, YEAR_RANGE):
                out.append((a.end, (_bind(a, "year"),)))
            for g in self.unit_at(a.end, "YEAR"):
                if not g.apostrophe:
                    out.append((g.end, (_bind(a, "year"), _bind(g, "unit"))))
        return [(end, Binding("YEAR_EXPR", i, end - 1, bs, "year_expr")) for end, bs in out]

    # -- main patterns ----------------------------------------------------

    def matches(self, number: int, i: int) -> list[tuple[int, tuple[Binding, ...]]]:
        """Distinct-extent matches of one pattern starting at token ``i``.

        When several derivations cover the same extent, the first one found
        is kept.
        """
        key = i * 18 + number
        hit = self._memo.get(key)
        if hit is None:
            hit = []
            seen = set()
            if i < self.n and not _STARTS[number].isdisjoint(self._starts[i]):
                for end, bs in _RULES[number](self, i):
                    if end not in seen:
                        seen.add(end)
                        hit.append((end, tuple(bs)))
            self._memo[key] = hit
        return hit

    def _p1(self, i):
        # 23.03.2015 / 23/03/2015
        num = self.numeric[i]
        if num and num[0] == "DMY":
            _, d, m, y, _sep = num
            if _within(d, DAY_RANGE) and _within(m, MONTH_RANGE) and _within(y, YEAR_RANGE):
                sufs = self.stream[i].suffixes
                yield i + 1, [
                    Binding(NUM, i, i, d, "day"),
                    Binding(NUM, i, i, m, "month"),
                    Binding(NUM, i, i, y, "year", sufs),
                ]

    def _p2(self, i):
        # <NUM>? <MON> <NUM>? <DAY>?, at least one optional part present
        heads = [(i, [])]
        for a in self.at(i, NUM, bare=True):
            if _within(a.value, DAY_RANGE):
                heads.append((a.end, [_bind(a, "day")]))
        for pos, bs in heads:
            for m in self.at(pos, MON, bare=True):
                b1 = bs + [_bind(m, "month")]
                tails = [(m.end, b1)]
                for y in self.at(m.end, NUM, bare=True):
                    if _within(y.value, YEAR_RANGE):
                        tails.append((y.end, b1 + [_bind(y, "year")]))
                for pos2, b2 in tails:
                    if len(b2) > 1:
                        yield pos2, b2
                    for d in self.at(pos2, DAY, bare=True):
                        yield d.end, b2 + [_bind(d, "weekday")]

    def _p3(self, i):
        # <YEAR-EXPR> <MON-EXPR>? <DAY-EXPR>?
        for end, yb in self.year_expr(i):
            parts = yb.value
            # a lone "15 yıl" is left to the duration reading
            if not (len(parts) == 2 and not parts[1].suffixes):
                yield end, [yb]
            for end2, mb in self.mon_expr(end):
                yield end2, [yb, mb]
                for end3, db in self.day_expr(end2):
                    yield end3, [yb, mb, db]
            for end2, db in self.day_expr(end):
                yield end2, [yb, db]

    def _p4(self, i):
        # <YEAR-EXPR> <NUM> (<MON><SUF>* | <MON> <DAY>?)
        for end, yb in self.year_expr(i):
            for n in self.at(end, NUM, bare=True):
                if not _within(n.value, DAY_RANGE):
                    continue
                for m in self.at(n.end, MON):
                    base = [yb, _bind(n, "day"), _bind(m, "month")]
                    yield m.end, base
                    if m.bare:
                        for d in self.at(m.end, DAY, bare=True):
                            yield d.end, base + [_bind(d, "weekday")]

    def _p5(self, i):
        # <MON-EXPR> <DAY-EXPR>?
        for end, mb in self.mon_expr(i):
            yield end, [mb]
            for end2, db in self.day_expr(end):
                yield end2, [mb, db]

    def _p6(self, i):
        # <MOD>? (<T-UNIT> | <DAY> | <MON> | <SEAS>); a bare T-UNIT needs the MOD
        for cls, role in ((DAY, "weekday"), (MON, "month"), (SEAS, "season")):
            for a in self.at(i, cls, bare=True):
                yield a.end, [_bind(a, role)]
        for mod in self.at(i, MOD, bare=True):
            for cls, role in ((T_UNIT, "unit"), (DAY, "weekday"), (MON, "month"), (SEAS, "season")):
                for a in self.at(mod.end, cls, bare=True):
                    yield a.end, [_bind(mod, "mod"), _bind(a, role)]

    def _p7(self, i):
        for a in self.at(i, DEIC, bare=True):
            yield a.end, [_bind(a, "deictic")]

    def _clock(self, i):
        num = self.numeric[i] if i < self.n else None
        if num and num[0] == "CLOCK":
            _, h, m, _sep = num
            if _within(h, HOUR_RANGE) and 0 <= m <= 59 and not (h == 24 and m):
                return Binding("CLOCK", i, i, (h, m), "clock", self.stream[i].suffixes)
        return None

    def _dpart_heads(self, i):
        heads = [(i, [])]
        for a in self.at(i, D_PART, bare=True):
            heads.append((a.end, [_bind(a, "dpart")]))
        return heads

    def _p8(self, i):
        # <D-PART>? saat? (<NUM>.<NUM> | <NUM>:<NUM>)
        for pos, bs in self._dpart_heads(i):
            clock = self._clock(pos)
            if clock:
                yield pos + 1, bs + [clock]
            for s in self.unit_at(pos, "HOUR"):
                if s.bare:
                    clock = self._clock(s.end)
                    if clock:
                        yield s.end + 1, bs + [_bind(s, "unit"), clock]

    def _p9(self, i):
        # <D-PART>? saat <NUM>
        for pos, bs in self._dpart_heads(i):
            for s in self.unit_at(pos, "HOUR"):
                if not s.bare:
                    continue
                for n in self.at(s.end, NUM, bare=True):
                    if _within(n.value, HOUR_RANGE):
                        yield n.end, bs + [_bind(s, "unit"), _bind(n, "hour")]

    def _day_heads(self, i):
        heads = [(i, [])]
        for a in self.at(i, DAY, bare=True):
            heads.append((a.end, [_bind(a, "weekday")]))
        return heads

    def _p10(self, i):
        # <DAY>? <D-PART> saat<SUF>*
        for pos, bs in self._day_heads(i):
            for dp in self.at(pos, D_PART, bare=True):
                for s in self.unit_at(dp.end, "HOUR"):
                    if not s.apostrophe:
                        yield s.end, bs + [_bind(dp, "dpart"), _bind(s, "unit")]

    def _p11(self, i):
        # <DAY>? <D-PART><SUF>*
        for pos, bs in self._day_heads(i):
            for dp in self.at(pos, D_PART):
                if not dp.apostrophe:
                    yield dp.end, bs + [_bind(dp, "dpart")]

    def _p12(self, i):
        # <DATE-EXPR> <TIME-EXPR>, one level deep
        for dn in range(1, 8):
            for end, dbs in self.matches(dn, i):
                date = self._make(dn, i, end, dbs)
                for tn in range(8, 12):
                    for end2, tbs in self.matches(tn, end):
                        time = self._make(tn, end, end2, tbs)
                        yield end2, [
                            Binding("DATE_EXPR", i, end - 1, date, "date"),
                            Binding("TIME_EXPR", end, end2 - 1, time, "time"),
                        ]

    def _p13(self, i):
        # <DET> (<T-UNIT> | <DAY> | <MON> | <SEAS>)
        for det in self.at(i, DET, bare=True):
            for cls, role in ((T_UNIT, "unit"), (DAY, "weekday"), (MON, "month"), (SEAS, "season")):
                for a in self.at(det.end, cls, bare=True):
                    yield a.end, [_bind(det, "det"), _bind(a, role)]

    def _locative_units(self, i):
        return [
            a
            for a in self.at(i, T_UNIT)
            if not a.apostrophe and len(a.suffixes) == 1 and is_locative(a.suffixes[0])
        ]

    def _count_tail(self, i, bs):
        # <NUM> <QUANT>?
        for n in self.at(i, NUM, bare=True):
            b = bs + [_bind(n, "count")]
            yield n.end, b
            for q in self.at(n.end, QUANT, bare=True):
                yield q.end, b + [_bind(q, "quant")]

    def _p14(self, i):
        # <T-UNIT><SUF> <NUM> <QUANT>?
        for u in self._locative_units(i):
            yield from self._count_tail(u.end, [_bind(u, "unit")])

    def _p15(self, i):
        # <DET>? <NUM>? <T-UNIT><SUF> <NUM> <QUANT>?, with DET or the first NUM present
        heads = []
        for det in self.at(i, DET, bare=True):
            heads.append((det.end, [_bind(det, "det")]))
            for n in self.at(det.end, NUM, bare=True):
                heads.append((n.end, [_bind(det, "det"), _bind(n, "period")]))
        for n in self.at(i, NUM, bare=True):
            heads.append((n.end, [_bind(n, "period")]))
        for pos, bs in heads:
            for u in self._locative_units(pos):
                yield from self._count_tail(u.end, bs + [_bind(u, "unit")])

    def _p16(self, i):
        # <NUM> <T-UNIT>
        for n in self.at(i, NUM, bare=True):
            for u in self.at(n.end, T_UNIT, bare=True):
                yield u.end, [_bind(n, "count"), _bind(u, "unit")]

    def _p17(self, i):
        # <T-UNIT><SUF>*
        for u in self.at(i, T_UNIT):
            if not u.apostrophe:
                yield u.end, [_bind(u, "unit")]

    # -- assembly ---------------------------------------------------------

    def _make(self, number: int, first: int, end: int, bindings) -> RawMatch:
        start = self.stream[first].start
        stop = self.stream[end - 1].end
        return RawMatch(
            PATTERNS[number], first, end - 1, tuple(bindings), (start, stop), self.stream.source[start:stop]
        )


def _longest(found):
    if not found:
        return None
    best_end = max(end for end, _ in found)
    for end, binding in found:
        if end == best_end:
            return binding.last - binding.first + 1, binding
    return None


_RULES = [None] + [getattr(Chart, f"_p{n}") for n in range(1, 18)]


def match_day_expr(chart: Chart, at: int):
    """Longest ``<DAY-EXPR>`` at token ``at`` as (length, binding), or None."""
    return _longest(chart.day_expr(at))


def match_mon_expr(chart: Chart, at: int):
    return _longest(chart.mon_expr(at))


def match_year_expr(chart: Chart, at: int):
    return _longest(chart.year_expr(at))


def _sort_key(m: RawMatch):
    return (m.first, -m.length, m.pattern.number)


def scan(tokens: TokenStream, lexicon: Optional[Lexicon] = None, strict_case: bool = False) -> list[RawMatch]:
    """Every match of every pattern at every start position."""
    chart = tokens if isinstance(tokens, Chart) else Chart(tokens, lexicon, strict_case)
    found = []
    for i in range(chart.n):
        if not (chart.atoms[i] or chart.numeric[i]):
            continue
        for number in range(1, 18):
            for end, bs in chart.matches(number, i):
                found.append(chart._make(number, i, end, bs))
    found.sort(key=_sort_key)
    return found


def _resolve_key(m: RawMatch):
    return (m.first, -m.length, TYPE_PRIORITY[m.kind], m.pattern.number)


def resolve(candidates: list[RawMatch]) -> list[RawMatch]:
    """Leftmost-longest, non-overlapping selection.

    Ties on (start, length) go to TIME, then SET, DATE, DURATION, then the
    lower pattern number.
    """
    kept = []
    frontier = -1
    for m in sorted(candidates, key=_resolve_key):
        if m.first > frontier:
            kept.append(m)
            frontier = m.last
    return kept


def find(tokens: TokenStream, lexicon: Optional[Lexicon] = None, strict_case: bool = False) -> list[RawMatch]:
    return resolve(scan(tokens, lexicon, strict_case))
