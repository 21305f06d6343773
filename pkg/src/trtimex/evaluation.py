"""Precision/recall/F1 of predicted TIMEX3 annotations against gold."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .normalize import TIMEX_TYPES, Timex3
from .serialize import AnnotatedDocument


@dataclass
class Counts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    @property
    def precision(self) -> float:
        return self.tp / (self.tp + self.fp) if self.tp + self.fp else 0.0

    @property
    def recall(self) -> float:
        return self.tp / (self.tp + self.fn) if self.tp + self.fn else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0

    def __iadd__(self, other: "Counts"):
        self.tp += other.tp
        self.fp += other.fp
        self.fn += other.fn
        return self

    def as_dict(self) -> dict:
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
        }


@dataclass
class EvalReport:
    strict: Counts = field(default_factory=Counts)
    relaxed: Counts = field(default_factory=Counts)
    strict_by_type: dict = field(default_factory=lambda: {t: Counts() for t in TIMEX_TYPES})
    relaxed_by_type: dict = field(default_factory=lambda: {t: Counts() for t in TIMEX_TYPES})
    documents: int = 0

    def merge(self, other: "EvalReport") -> "EvalReport":
        self.strict += other.strict
        self.relaxed += other.relaxed
        for t in TIMEX_TYPES:
            self.strict_by_type[t] += other.strict_by_type[t]
            self.relaxed_by_type[t] += other.relaxed_by_type[t]
        self.documents += other.documents
        return self

    def as_dict(self) -> dict:
        return {
            "documents": self.documents,
            "strict": self.strict.as_dict(),
            "relaxed": self.relaxed.as_dict(),
            "strict_by_type": {t: c.as_dict() for t, c in self.strict_by_type.items()},
            "relaxed_by_type": {t: c.as_dict() for t, c in self.relaxed_by_type.items()},
        }

    def format(self) -> str:
        lines = [f"documents: {self.documents}", f"{'':10}{'mode':8}{'tp':>5}{'fp':>5}{'fn':>5}{'P':>8}{'R':>8}{'F1':>8}"]

        def row(label, mode, c):
            lines.append(
                f"{label:10}{mode:8}{c.tp:5d}{c.fp:5d}{c.fn:5d}{c.precision:8.3f}{c.recall:8.3f}{c.f1:8.3f}"
            )

        row("ALL", "strict", self.strict)
        row("ALL", "relaxed", self.relaxed)
        for t in TIMEX_TYPES:
            row(t, "strict", self.strict_by_type[t])
            row(t, "relaxed", self.relaxed_by_type[t])
        return "\n".join(lines) + "\n"


def _strict_key(t: Timex3):
    return (t.start, t.end, t.type, t.value, t.quant, t.freq)


def _overlap(a: Timex3, b: Timex3) -> bool:
    return a.start < b.end and b.start < a.end


def score_document(gold: AnnotatedDocument, predicted: AnnotatedDocument) -> EvalReport:
    report = EvalReport(documents=1)

    # strict: exact extent, type, value, quant and freq; one-to-one
    unmatched = list(predicted.timexes)
    for g in gold.timexes:
        hit = next((p for p in unmatched if _strict_key(p) == _strict_key(g)), None)
        if hit is not None:
            unmatched.remove(hit)
            report.strict.tp += 1
            report.strict_by_type[g.type].tp += 1
        else:
            report.strict.fn += 1
            report.strict_by_type[g.type].fn += 1
    for p in unmatched:
        report.strict.fp += 1
        report.strict_by_type[p.type].fp += 1

    # relaxed: overlapping extent and same type; one-to-one, greedy in text order
    unmatched = sorted(predicted.timexes, key=lambda t: t.start)
    for g in sorted(gold.timexes, key=lambda t: t.start):
        hit = next((p for p in unmatched if p.type == g.type and _overlap(p, g)), None)
        if hit is not None:
            unmatched.remove(hit)
            report.relaxed.tp += 1
            report.relaxed_by_type[g.type].tp += 1
        else:
            report.relaxed.fn += 1
            report.relaxed_by_type[g.type].fn += 1
    for p in unmatched:
        report.relaxed.fp += 1
        report.relaxed_by_type[p.type].fp += 1
    return report


def evaluate(gold: Iterable[AnnotatedDocument], predicted: Iterable[AnnotatedDocument]) -> EvalReport:
    report = EvalReport()
    for g, p in zip(gold, predicted):
        report.merge(score_document(g, p))
    return report
