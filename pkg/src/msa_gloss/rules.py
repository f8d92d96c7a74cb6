"""Trigger inventory for the tense, mood, polarity and emphasis rules.

The compiled-in defaults are the Arabic triggers for each category. An
override file can replace whole categories::

    # category <TAB> trigger <TAB> value
    negation	لن	Future
    question-adverb	متى	WHEN
    conditional	إذا
    emphasis	جدا

Categories named in the file replace that category's defaults entirely;
categories not named keep them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from .errors import RuleSetError


class Tense(enum.Enum):
    PAST = "Past"
    PRESENT = "Present"
    FUTURE = "Future"
    UNSPECIFIED = "Unspecified"


DEFAULT_NEGATION = {
    "لا": Tense.PRESENT,
    "ليس": Tense.PRESENT,
    "لن": Tense.FUTURE,
    "لم": Tense.PAST,
}
DEFAULT_QUESTION_ADVERBS = {
    "هل": "YES-NO",
    "من": "WHO",
    "أين": "WHERE",
    "متى": "WHEN",
    "ماذا": "WHAT",
    "كيف": "HOW",
}

MAP_CATEGORIES = ("negation", "question-adverb")
SET_CATEGORIES = ("future-prefix", "present-prefix", "question-mark", "conditional", "emphasis")
CATEGORIES = MAP_CATEGORIES + SET_CATEGORIES


@dataclass(frozen=True)
class RuleSet:
    future_prefix: str = "س"
    present_prefixes: frozenset[str] = frozenset("تنيأ")
    negation_particles: Mapping[str, Tense] = field(
        default_factory=lambda: MappingProxyType(dict(DEFAULT_NEGATION))
    )
    question_adverbs: Mapping[str, str] = field(
        default_factory=lambda: MappingProxyType(dict(DEFAULT_QUESTION_ADVERBS))
    )
    question_marks: frozenset[str] = frozenset("؟?")
    conditional_particles: frozenset[str] = frozenset({"إذا", "لو"})
    emphasis_words: frozenset[str] = frozenset({"جدا", "مرارا"})

    def __post_init__(self) -> None:
        # freeze whatever mapping/iterable the caller handed in
        object.__setattr__(self, "negation_particles", MappingProxyType(dict(self.negation_particles)))
        object.__setattr__(self, "question_adverbs", MappingProxyType(dict(self.question_adverbs)))
        for name in ("present_prefixes", "question_marks", "conditional_particles", "emphasis_words"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        self.validate()

    def validate(self) -> None:
        if len(self.future_prefix) != 1:
            raise ValueError(f"future prefix must be one letter, got {self.future_prefix!r}")
        if any(len(p) != 1 for p in self.present_prefixes):
            raise ValueError("present prefixes must be single letters")
        if self.future_prefix in self.present_prefixes:
            raise ValueError(f"{self.future_prefix!r} is both a future and a present prefix")
        if any(len(m) != 1 for m in self.question_marks):
            raise ValueError("question marks must be single characters")
        groups = {
            "present-prefix": self.present_prefixes,
            "question-mark": self.question_marks,
            "negation": self.negation_particles,
            "question-adverb": self.question_adverbs,
            "conditional": self.conditional_particles,
            "emphasis": self.emphasis_words,
        }
        for name, members in groups.items():
            if not members:
                raise ValueError(f"rule category {name!r} is empty")
        for tense in self.negation_particles.values():
            if tense is Tense.UNSPECIFIED:
                raise ValueError("a negation particle must imply a concrete tense")
        seen: dict[str, str] = {}
        for name in ("negation", "question-adverb", "conditional", "emphasis"):
            for word in groups[name]:
                if word in seen:
                    raise ValueError(f"{word!r} appears in both {seen[word]!r} and {name!r}")
                seen[word] = name

    def category_of(self, word: str) -> str | None:
        """Return the word-trigger category of ``word``, if any."""
        if word in self.negation_particles:
            return "negation"
        if word in self.question_adverbs:
            return "question-adverb"
        if word in self.conditional_particles:
            return "conditional"
        if word in self.emphasis_words:
            return "emphasis"
        return None


DEFAULT_RULES = RuleSet()

_TENSE_BY_NAME = {t.value: t for t in Tense if t is not Tense.UNSPECIFIED}


def parse_rules(lines, path: str | None = None, base: RuleSet = DEFAULT_RULES) -> RuleSet:
    """Build a RuleSet from override lines; see the module docstring."""
    collected: dict[str, list[tuple[str, str, int]]] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        category = cols[0].strip()
        if category not in CATEGORIES:
            raise RuleSetError(f"unknown category {category!r}", path, lineno)
        if category in MAP_CATEGORIES and len(cols) != 3:
            raise RuleSetError(f"{category} needs 3 columns, got {len(cols)}", path, lineno)
        if category in SET_CATEGORIES and len(cols) not in (2, 3):
            raise RuleSetError(f"{category} needs 2 or 3 columns, got {len(cols)}", path, lineno)
        trigger = cols[1].strip()
        value = cols[2].strip() if len(cols) > 2 else ""
        if not trigger:
            raise RuleSetError("empty trigger", path, lineno)
        if category in MAP_CATEGORIES and not value:
            raise RuleSetError(f"{category} {trigger!r} has no value", path, lineno)
        if category == "negation" and value not in _TENSE_BY_NAME:
            raise RuleSetError(
                f"negation tense must be one of {sorted(_TENSE_BY_NAME)}, got {value!r}", path, lineno
            )
        collected.setdefault(category, []).append((trigger, value, lineno))

    overrides: dict[str, object] = {}
    for category, rows in collected.items():
        if category == "negation":
            overrides["negation_particles"] = {t: _TENSE_BY_NAME[v] for t, v, _ in rows}
        elif category == "question-adverb":
            overrides["question_adverbs"] = {t: v for t, v, _ in rows}
        elif category == "future-prefix":
            if len(rows) != 1:
                raise RuleSetError("exactly one future-prefix is allowed", path, rows[1][2])
            overrides["future_prefix"] = rows[0][0]
        else:
            attr = {
                "present-prefix": "present_prefixes",
                "question-mark": "question_marks",
                "conditional": "conditional_particles",
                "emphasis": "emphasis_words",
            }[category]
            overrides[attr] = frozenset(t for t, _, _ in rows)

    fields_ = {
        "future_prefix": base.future_prefix,
        "present_prefixes": base.present_prefixes,
        "negation_particles": base.negation_particles,
        "question_adverbs": base.question_adverbs,
        "question_marks": base.question_marks,
        "conditional_particles": base.conditional_particles,
        "emphasis_words": base.emphasis_words,
    }
    fields_.update(overrides)
    try:
        return RuleSet(**fields_)
    except ValueError as exc:
        raise RuleSetError(str(exc), path) from None


def load_rules(path: str | Path) -> RuleSet:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise RuleSetError(f"cannot read rule file ({exc.strerror or exc})", str(path)) from None
    except UnicodeDecodeError:
        raise RuleSetError("rule file is not valid UTF-8", str(path)) from None
    return parse_rules(text.splitlines(), str(path))
