"""Inline TimeML and standoff JSON rendering, and parsing of gold files.

Inline output is a fragment: the source text with ``<TIMEX3 ...>`` elements
around each annotated extent. Text inside an element is XML-escaped; text
outside elements is left byte-identical, so a document without annotations
renders as itself.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from typing import Iterable
from xml.sax.saxutils import escape, unescape

from .exceptions import DefectError, GoldParseError
from .normalize import TIMEX_TYPES, Timex3

ATTRIBUTE_ORDER = ("tid", "type", "value", "quant", "freq")
_ATTR_ESCAPES = {'"': "&quot;"}

_TAG_RE = re.compile(r"<TIMEX3\b([^<>]*)>|</TIMEX3>")
_ATTR_RE = re.compile(r'\s+([A-Za-z]+)="([^"]*)"')


@dataclass
class AnnotatedDocument:
    text: str
    timexes: list[Timex3]

    def __iter__(self):
        return iter(self.timexes)

    def __len__(self):
        return len(self.timexes)


def assign_tids(timexes: Iterable[Timex3], text: str = "") -> AnnotatedDocument:
    """Number the annotations t1, t2, ... by start offset."""
    ordered = sorted(timexes, key=lambda t: (t.start, t.end))
    for a, b in zip(ordered, ordered[1:]):
        if b.start < a.end:
            raise DefectError(f"overlapping extents {a.extent} and {b.extent}")
    return AnnotatedDocument(text, [replace(t, tid=f"t{i}") for i, t in enumerate(ordered, 1)])


def _open_tag(t: Timex3) -> str:
    attrs = {"tid": t.tid, "type": t.type, "value": t.value, "quant": t.quant, "freq": t.freq}
    parts = [f'{k}="{escape(attrs[k], _ATTR_ESCAPES)}"' for k in ATTRIBUTE_ORDER if attrs[k] is not None]
    return "<TIMEX3 " + " ".join(parts) + ">"


def render_inline(doc: AnnotatedDocument) -> str:
    out = []
    pos = 0
    for t in sorted(doc.timexes, key=lambda t: t.start):
        out.append(doc.text[pos:t.start])
        out.append(_open_tag(t))
        out.append(escape(doc.text[t.start:t.end]))
        out.append("</TIMEX3>")
        pos = t.end
    out.append(doc.text[pos:])
    return "".join(out)


def byte_offset(text: str, char_offset: int) -> int:
    return len(text[:char_offset].encode("utf-8"))


def render_standoff(doc: AnnotatedDocument) -> str:
    """JSON with byte offsets into the UTF-8 encoded text."""
    timexes = []
    for t in sorted(doc.timexes, key=lambda t: t.start):
        item = {"tid": t.tid, "type": t.type, "value": t.value}
        if t.quant is not None:
            item["quant"] = t.quant
        if t.freq is not None:
            item["freq"] = t.freq
        item["start"] = byte_offset(doc.text, t.start)
        item["end"] = byte_offset(doc.text, t.end)
        item["text"] = t.text
        timexes.append(item)
    return json.dumps({"text": doc.text, "timexes": timexes}, ensure_ascii=False) + "\n"


def parse_gold(inline: str) -> AnnotatedDocument:
    """Inverse of ``render_inline``."""
    plain = []
    length = 0
    timexes = []
    open_tag = None  # (attrs, start offset in plain text, offset in input)
    pos = 0
    for m in _TAG_RE.finditer(inline):
        chunk = inline[pos:m.start()]
        if open_tag is not None:
            chunk = unescape(chunk)
        plain.append(chunk)
        length += len(chunk)
        pos = m.end()
        if m.group(0) == "</TIMEX3>":
            if open_tag is None:
                raise GoldParseError("closing tag without an open TIMEX3", m.start())
            attrs, start, _ = open_tag
            text = "".join(plain)[start:]
            timexes.append(
                Timex3(
                    attrs["type"],
                    attrs["value"],
                    start,
                    length,
                    text,
                    tid=attrs["tid"],
                    quant=attrs.get("quant"),
                    freq=attrs.get("freq"),
                )
            )
            open_tag = None
            continue
        if open_tag is not None:
            raise GoldParseError("nested TIMEX3 tags (overlapping annotations)", m.start())
        attrs = _parse_attrs(m.group(1), m.start())
        open_tag = (attrs, length, m.start())
    if open_tag is not None:
        raise GoldParseError("unclosed TIMEX3 tag", open_tag[2])
    plain.append(inline[pos:])
    return AnnotatedDocument("".join(plain), timexes)


def _parse_attrs(raw: str, offset: int) -> dict:
    attrs = {}
    consumed = 0
    for m in _ATTR_RE.finditer(raw):
        if m.start() != consumed:
            break
        consumed = m.end()
        name, value = m.group(1), unescape(m.group(2), {"&quot;": '"'})
        if name not in ATTRIBUTE_ORDER:
            raise GoldParseError(f"unknown TIMEX3 attribute {name!r}", offset)
        if name in attrs:
            raise GoldParseError(f"repeated attribute {name!r}", offset)
        attrs[name] = value
    if raw[consumed:].strip():
        raise GoldParseError(f"malformed TIMEX3 tag <TIMEX3{raw}>", offset)
    for name in ("tid", "type", "value"):
        if name not in attrs:
            raise GoldParseError(f"TIMEX3 tag lacks {name!r}", offset)
    if attrs["type"] not in TIMEX_TYPES:
        raise GoldParseError(f"unknown TIMEX3 type {attrs['type']!r}", offset)
    return attrs
