"""Exact-match evaluation of the pipeline against a hand-built gold corpus.

Gold files are UTF-8 TSV, one sentence per row::

    source <TAB> tense <TAB> mood <TAB> polarity <TAB> emphasis [<TAB> glosses]

mood is ``Declarative``, ``Conditional`` or ``Interrogative(LABEL)``;
polarity is ``Affirmative`` or ``Negative(PARTICLE)``; emphasis words are
joined with ``;`` and glosses with spaces. ``-`` or an empty cell means
none. Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from .errors import GoldParseError
from .morphology import Lexicon
from .pipeline import Translator
from .rules import DEFAULT_RULES, RuleSet, Tense

CATEGORIES = ("tense", "mood", "polarity", "emphasis")

_MOOD_RE = re.compile(r"^(Declarative|Conditional|Interrogative\((\S+)\))$")
_POLARITY_RE = re.compile(r"^(Affirmative|Negative\((\S+)\))$")
_TENSES = {t.value for t in Tense}


@dataclass(frozen=True)
class GoldRecord:
    source: str
    tense: str
    mood: str
    polarity: str
    emphasis: tuple[str, ...] = ()
    glosses: str | None = None
    line: int = 0


@dataclass
class Diff:
    line: int
    source: str
    category: str
    expected: str
    actual: str

    def __str__(self) -> str:
        return f"line {self.line}: {self.source}\n  {self.category}: expected {self.expected!r}, got {self.actual!r}"


@dataclass
class EvalReport:
    total: int
    correct: dict[str, int]
    counted: dict[str, int]
    diffs: list[Diff] = field(default_factory=list)

    @property
    def accuracy(self) -> dict[str, float]:
        return {k: self.correct[k] / self.counted[k] for k in self.counted if self.counted[k]}

    @property
    def perfect(self) -> bool:
        return all(v == 1.0 for v in self.accuracy.values())

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "accuracy": self.accuracy,
            "diffs": [vars(d) for d in self.diffs],
        }

    def format(self) -> str:
        lines = [f"sentences: {self.total}"]
        for cat, acc in self.accuracy.items():
            lines.append(f"{cat:<9} {acc:.4f} ({self.correct[cat]}/{self.counted[cat]})")
        for d in self.diffs:
            lines.append(str(d))
        return "\n".join(lines)


def _none_or(cell: str) -> str:
    return "" if cell.strip() in ("", "-") else cell.strip()


def parse_gold(lines: Iterable[str], path: str | None = None) -> list[GoldRecord]:
    records = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) not in (5, 6):
            raise GoldParseError(f"expected 5 or 6 tab-separated columns, got {len(cols)}", path, lineno)
        source, tense, mood, polarity, emphasis = (c.strip() for c in cols[:5])
        if not source:
            raise GoldParseError("empty source sentence", path, lineno)
        if tense not in _TENSES:
            raise GoldParseError(f"unknown tense {tense!r}", path, lineno)
        if not _MOOD_RE.match(mood):
            raise GoldParseError(f"malformed mood {mood!r}", path, lineno)
        if not _POLARITY_RE.match(polarity):
            raise GoldParseError(f"malformed polarity {polarity!r}", path, lineno)
        emph = tuple(w for w in _none_or(emphasis).split(";") if w)
        glosses = _none_or(cols[5]) if len(cols) == 6 else ""
        records.append(GoldRecord(source, tense, mood, polarity, emph, glosses or None, lineno))
    return records


def load_gold(path: str | Path) -> list[GoldRecord]:
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as fh:
            return parse_gold(fh, str(path))
    except UnicodeDecodeError:
        raise GoldParseError("gold file is not valid UTF-8", str(path)) from None


def default_gold_path() -> Path:
    return Path(str(resources.files("msa_gloss") / "data" / "gold.tsv"))


def evaluate(gold: list[GoldRecord], lexicon: Lexicon, rules: RuleSet = DEFAULT_RULES) -> EvalReport:
    if not gold:
        raise GoldParseError("empty corpus")
    translator = Translator(lexicon, rules)
    counted = {c: len(gold) for c in CATEGORIES}
    with_glosses = sum(1 for r in gold if r.glosses is not None)
    if with_glosses:
        counted["glosses"] = with_glosses
    correct = {c: 0 for c in counted}
    diffs: list[Diff] = []

    for rec in gold:
        expected = {
            "tense": rec.tense,
            "mood": rec.mood,
            "polarity": rec.polarity,
            "emphasis": ";".join(rec.emphasis),
        }
        if rec.glosses is not None:
            expected["glosses"] = rec.glosses

        translations = translator.translate(rec.source)
        if len(translations) != 1:
            actual = {c: f"<{len(translations)} sentences>" for c in expected}
        else:
            tr = translations[0]
            actual = {
                "tense": tr.features.tense.value,
                "mood": tr.features.mood_text,
                "polarity": tr.features.polarity_text,
                "emphasis": ";".join(tr.features.emphasis),
                "glosses": tr.gloss.gloss_text,
            }
        for cat, want in expected.items():
            if actual[cat] == want:
                correct[cat] += 1
            else:
                diffs.append(Diff(rec.line, rec.source, cat, want, actual[cat]))
    return EvalReport(len(gold), correct, counted, diffs)
