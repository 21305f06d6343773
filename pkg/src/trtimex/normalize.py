"""TIMEX3 value construction for resolved matches."""

from __future__ import annotations

import datetime as dt
import re
from dataclasses import dataclass, field
from typing import Optional

from .exceptions import DefectError
from .lexicon import SEASON_CODES
from .patterns import RawMatch

TIMEX_TYPES = ("DATE", "TIME", "SET", "DURATION")

# period designators; clock units go after "T"
_DATE_UNITS = {"DAY": "D", "WEEK": "W", "MONTH": "M", "YEAR": "Y", "SEASON": "SE", "CENTURY": "CE"}
_CLOCK_UNITS = {"HOUR": "H", "MINUTE": "M", "SECOND": "S"}

_SEASON_START = {"SP": 3, "SU": 6, "FA": 9, "WI": 12}

_Y = r"(?:[0-9]{4}|XXXX)"
_2 = r"(?:[0-9]{2}|XX)"
_TIME = rf"T(?:{_2}(?::{_2}(?::{_2})?)?|MO|AF|EV|NI|DT)"
_DATE = rf"(?:{_Y}(?:-{_2}(?:-{_2})?)?|{_Y}-W{_2}(?:-[1-7])?|{_Y}-(?:SP|SU|FA|WI))"
VALUE_RE = re.compile(
    rf"""
    PRESENT_REF
    |{_2}                                   # century
    |{_DATE}(?:{_TIME})?
    |{_TIME}
    |P(?:[0-9]+|X)(?:Y|M|W|D|SE|CE)
    |PT(?:[0-9]+|X)(?:H|M|S)
    """,
    re.VERBOSE,
)


def is_valid_value(value: str) -> bool:
    return VALUE_RE.fullmatch(value) is not None


@dataclass(frozen=True)
class ReferenceDate:
    year: int
    month: int
    day: int
    time: Optional[dt.time] = None

    def __post_init__(self):
        dt.date(self.year, self.month, self.day)  # raises ValueError on a bad date

    @classmethod
    def parse(cls, text: str) -> "ReferenceDate":
        """Parse ``YYYY-MM-DD`` or ``YYYY-MM-DDTHH:MM``."""
        text = text.strip()
        if "T" in text:
            stamp = dt.datetime.fromisoformat(text)
            return cls(stamp.year, stamp.month, stamp.day, stamp.time())
        if not re.fullmatch(r"[0-9]{4}-[0-9]{2}-[0-9]{2}", text):
            raise ValueError(f"expected YYYY-MM-DD, got {text!r}")
        d = dt.date.fromisoformat(text)
        return cls(d.year, d.month, d.day)

    @classmethod
    def from_date(cls, d: dt.date) -> "ReferenceDate":
        return cls(d.year, d.month, d.day)

    @property
    def date(self) -> dt.date:
        return dt.date(self.year, self.month, self.day)

    @property
    def weekday(self) -> int:
        return self.date.isoweekday()

    def __str__(self):
        text = self.date.isoformat()
        if self.time is not None:
            text += "T" + self.time.strftime("%H:%M")
        return text


@dataclass
class Timex3:
    type: str
    value: str
    start: int  # character offsets into the source
    end: int
    text: str
    tid: str = ""
    quant: Optional[str] = None
    freq: Optional[str] = None
    pattern: Optional[int] = field(default=None, compare=False)
    diagnostics: list = field(default_factory=list, compare=False, repr=False)

    @property
    def extent(self) -> tuple[int, int]:
        return self.start, self.end


# ---------------------------------------------------------------------------
# helpers


def _roles(bindings) -> dict:
    out = {}
    for top in bindings:
        for b in top.walk():
            out.setdefault(b.role, b)
    return out


def weekday_value(day: int) -> str:
    if not isinstance(day, int) or not 1 <= day <= 7:
        raise DefectError(f"weekday {day!r} outside 1..7")
    return f"XXXX-WXX-{day}"


def _ymd(year=None, month=None, day=None) -> str:
    y = f"{year:04d}" if year is not None else "XXXX"
    if month is None and day is None:
        return y
    m = f"{month:02d}" if month is not None else "XX"
    if day is None:
        return f"{y}-{m}"
    return f"{y}-{m}-{day:02d}"


def season_of(d: dt.date) -> tuple[int, str]:
    """(year, code) of the season containing ``d``; winter belongs to December's year."""
    if d.month in (1, 2):
        return d.year - 1, "WI"
    for code in ("WI", "FA", "SU", "SP"):
        if d.month >= _SEASON_START[code]:
            return d.year, code
    raise AssertionError("unreachable")


def _add_months(d: dt.date, n: int) -> tuple[int, int]:
    k = d.year * 12 + d.month - 1 + n
    return k // 12, k % 12 + 1


def unit_period(unit: str, ref: ReferenceDate, offset: int) -> str:
    """Value of the calendar period of ``unit`` that is ``offset`` periods from the one containing ``ref``."""
    d = ref.date
    if unit == "YEAR":
        return f"{d.year + offset:04d}"
    if unit == "MONTH":
        y, m = _add_months(d, offset)
        return f"{y:04d}-{m:02d}"
    if unit == "WEEK":
        y, w, _ = (d + dt.timedelta(weeks=offset)).isocalendar()
        return f"{y:04d}-W{w:02d}"
    if unit == "DAY":
        return (d + dt.timedelta(days=offset)).isoformat()
    if unit == "SEASON":
        y, code = season_of(d)
        k = y * 4 + SEASON_CODES.index(code) + offset
        return f"{k // 4:04d}-{SEASON_CODES[k % 4]}"
    if unit == "CENTURY":
        return f"{d.year // 100 + offset:02d}"
    if unit in _CLOCK_UNITS:
        if ref.time is None:
            return {"HOUR": f"{d.isoformat()}TXX", "MINUTE": f"{d.isoformat()}TXX:XX"}.get(
                unit, f"{d.isoformat()}TXX:XX:XX"
            )
        stamp = dt.datetime.combine(d, ref.time)
        delta = {"HOUR": dt.timedelta(hours=offset), "MINUTE": dt.timedelta(minutes=offset)}.get(
            unit, dt.timedelta(seconds=offset)
        )
        stamp += delta
        fmt = {"HOUR": "%Y-%m-%dT%H", "MINUTE": "%Y-%m-%dT%H:%M"}.get(unit, "%Y-%m-%dT%H:%M:%S")
        return stamp.strftime(fmt)
    raise DefectError(f"unknown time unit {unit!r}")


_UNANCHORED = {
    "YEAR": "XXXX",
    "MONTH": "XXXX-XX",
    "WEEK": "XXXX-WXX",
    "DAY": "XXXX-XX-XX",
    "SEASON": "XXXX-XX",
    "CENTURY": "XX",
    "HOUR": "XXXX-XX-XXTXX",
    "MINUTE": "XXXX-XX-XXTXX:XX",
    "SECOND": "XXXX-XX-XXTXX:XX:XX",
}


def _nearest(cycle_index: int, target: int, period: int, direction: int) -> int:
    """Nearest index congruent to ``target`` (mod ``period``) strictly before/after ``cycle_index``."""
    k = cycle_index + direction
    while k % period != target:
        k += direction
    return k


def _shift_named(role: str, value, ref: ReferenceDate, direction: int) -> str:
    d = ref.date
    if role == "month":
        k = _nearest(d.year * 12 + d.month - 1, value - 1, 12, direction)
        return f"{k // 12:04d}-{k % 12 + 1:02d}"
    if role == "season":
        y, code = season_of(d)
        k = _nearest(y * 4 + SEASON_CODES.index(code), SEASON_CODES.index(value), 4, direction)
        return f"{k // 4:04d}-{SEASON_CODES[k % 4]}"
    if role == "weekday":
        k = _nearest(d.toordinal(), value % 7, 7, direction)
        # date.toordinal() % 7 is the ISO weekday mod 7 (Monday=1 ... Sunday=0)
        return dt.date.fromordinal(k).isoformat()
    raise DefectError(f"cannot shift a {role}")


# ---------------------------------------------------------------------------
# value builders


def date_value(bindings, ref: Optional[ReferenceDate] = None, diagnostics: Optional[list] = None) -> str:
    diagnostics = diagnostics if diagnostics is not None else []
    roles = _roles(bindings)
    if "deictic" in roles:
        anchor = roles["deictic"].value
        if isinstance(anchor, int):
            if ref is None:
                diagnostics.append("no reference date; deictic date left unanchored")
                return "XXXX-XX-XX"
            return (ref.date + dt.timedelta(days=anchor)).isoformat()
        return anchor  # PRESENT_REF and other symbolic anchors
    if "mod" in roles:
        direction = roles["mod"].value
        for role in ("unit", "weekday", "month", "season"):
            if role in roles:
                value = roles[role].value
                break
        else:
            raise DefectError("modifier without an operand")
        if ref is None:
            diagnostics.append("no reference date; relative date left unanchored")
            if role == "unit":
                return _UNANCHORED[value]
            if role == "weekday":
                return weekday_value(value)
            if role == "month":
                return _ymd(None, value)
            return f"XXXX-{value}"
        if role == "unit":
            return unit_period(value, ref, direction)
        return _shift_named(role, value, ref, direction)
    year = roles["year"].value if "year" in roles else None
    month = roles["month"].value if "month" in roles else None
    day = roles["day"].value if "day" in roles else None
    if year is None and month is None and day is None:
        if "weekday" in roles:
            return weekday_value(roles["weekday"].value)
        if "season" in roles:
            return f"XXXX-{roles['season'].value}"
        raise DefectError("date match carries no date component")
    return _ymd(year, month, day)


def _hour_for(hour: int, dpart: Optional[str]) -> int:
    # only evening and night move to the afternoon clock; "gece saat iki" stays 02:00
    if dpart == "EV" and 1 <= hour <= 11:
        return hour + 12
    if dpart == "NI" and 6 <= hour <= 11:
        return hour + 12
    return hour


def time_value(bindings, ref: Optional[ReferenceDate] = None, diagnostics: Optional[list] = None) -> str:
    diagnostics = diagnostics if diagnostics is not None else []
    top = {b.role: b for b in bindings}
    if "date" in top and "time" in top:
        date_part = normalize_value(top["date"].value, ref, diagnostics)
        time_part = normalize_value(top["time"].value, ref, diagnostics)
        return _join_date_time(date_part, time_part, diagnostics)
    roles = _roles(bindings)
    dpart = roles["dpart"].value if "dpart" in roles else None
    if "clock" in roles:
        hour, minute = roles["clock"].value
    elif "hour" in roles:
        hour, minute = roles["hour"].value, 0
    else:
        hour = None
    if hour is not None:
        hour = _hour_for(hour, dpart)
        if not (0 <= hour <= 24 and 0 <= minute <= 59):
            raise DefectError(f"clock reading {hour}:{minute} out of range")
        return f"T{hour:02d}:{minute:02d}"
    if dpart is None:
        raise DefectError("time match carries neither a clock reading nor a day part")
    if "weekday" in roles:
        return f"{weekday_value(roles['weekday'].value)}T{dpart}"
    return f"T{dpart}"


_CALENDAR_RE = re.compile(r"([0-9]{4}|XXXX)(?:-([0-9]{2}|XX))?(?:-([0-9]{2}|XX))?")
_WEEKLIKE_RE = re.compile(r"([0-9]{4}|XXXX)-W([0-9]{2}|XX)(?:-[1-7])?")


def _join_date_time(date_part: str, time_part: str, diagnostics: list) -> str:
    clock = time_part[time_part.index("T"):]
    m = _CALENDAR_RE.fullmatch(date_part)
    if m:
        y, mo, d = m.group(1), m.group(2) or "XX", m.group(3) or "XX"
        return f"{y}-{mo}-{d}{clock}"
    if _WEEKLIKE_RE.fullmatch(date_part):
        return date_part + clock
    diagnostics.append(f"date {date_part} cannot carry a time of day; kept the time only")
    return time_part


def _period(n, unit: str) -> str:
    count = "X" if n is None else str(n)
    if unit in _CLOCK_UNITS:
        return f"PT{count}{_CLOCK_UNITS[unit]}"
    return f"P{count}{_DATE_UNITS[unit]}"


def set_value(bindings) -> tuple[str, Optional[str], Optional[str]]:
    roles = _roles(bindings)
    quant = "EVERY" if "det" in roles else None
    freq = None
    if "unit" in roles:
        unit = roles["unit"].value
        period = roles["period"].value if "period" in roles else 1
        value = _period(period, unit)
        if "count" in roles:
            count = roles["count"].value
            if "period" not in roles or count != 1:
                freq = f"{count}X"
    elif "weekday" in roles:
        value = weekday_value(roles["weekday"].value)
    elif "month" in roles:
        value = _ymd(None, roles["month"].value)
    elif "season" in roles:
        value = f"XXXX-{roles['season'].value}"
    else:
        raise DefectError("set match carries no period")
    return value, quant, freq


def duration_value(bindings) -> str:
    roles = _roles(bindings)
    if "unit" not in roles:
        raise DefectError("duration match carries no unit")
    n = roles["count"].value if "count" in roles else None
    return _period(n, roles["unit"].value)


def normalize_value(match: RawMatch, ref: Optional[ReferenceDate] = None, diagnostics: Optional[list] = None) -> str:
    kind = match.pattern.kind
    if kind == "DATE":
        return date_value(match.bindings, ref, diagnostics)
    if kind == "TIME":
        return time_value(match.bindings, ref, diagnostics)
    if kind == "SET":
        return set_value(match.bindings)[0]
    if kind == "DURATION":
        return duration_value(match.bindings)
    raise DefectError(f"cannot normalize a {kind} match")


def normalize(match: RawMatch, ref: Optional[ReferenceDate] = None) -> Timex3:
    """Build the (tid-less) TIMEX3 annotation for one resolved match."""
    diagnostics: list = []
    quant = freq = None
    if match.pattern.kind == "SET":
        value, quant, freq = set_value(match.bindings)
    else:
        value = normalize_value(match, ref, diagnostics)
    if not is_valid_value(value):
        raise DefectError(f"produced malformed value {value!r} for {match.text!r}")
    start, end = match.span
    return Timex3(
        match.pattern.kind,
        value,
        start,
        end,
        match.text,
        quant=quant,
        freq=freq,
        pattern=match.pattern.number,
        diagnostics=diagnostics,
    )
