"""Gloss generation and rendering (inline text, JSON, TSV)."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Sequence

from .arabic_text import Sentence
from .errors import UsageError
from .features import Mood, Polarity, SentenceFeatures
from .morphology import POS, Analysis
from .rules import DEFAULT_RULES, RuleSet, Tense

CONTENT_POS = frozenset({POS.VERB, POS.NOUN, POS.ADJECTIVE, POS.ADVERB, POS.OTHER})

ABSORBED = "absorbed-into-tag"
PUNCTUATION = "punctuation"
PRONOUN = "pronoun"

TENSE_TAGS = {Tense.PAST: "PAST", Tense.PRESENT: "PRESENT", Tense.FUTURE: "FUTURE"}


class GlossRole(enum.Enum):
    CONTENT = "content"
    QUESTION_WORD = "question_word"
    EMPHASIS = "emphasis"


class RenderFormat(enum.Enum):
    INLINE = "inline"
    JSON = "json"
    TSV = "tsv"


@dataclass(frozen=True)
class GlossToken:
    gloss: str
    source: int
    role: GlossRole = GlossRole.CONTENT


@dataclass(frozen=True)
class Dropped:
    source: int
    reason: str


@dataclass(frozen=True)
class GlossSentence:
    glosses: tuple[GlossToken, ...]
    tags: tuple[str, ...]
    dropped: tuple[Dropped, ...] = ()

    def to_dict(self) -> dict:
        return {
            "glosses": [{"gloss": g.gloss, "role": g.role.value, "source": g.source} for g in self.glosses],
            "tags": list(self.tags),
            "dropped": [{"source": d.source, "reason": d.reason} for d in self.dropped],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GlossSentence":
        return cls(
            glosses=tuple(
                GlossToken(g["gloss"], int(g["source"]), GlossRole(g["role"])) for g in data["glosses"]
            ),
            tags=tuple(data["tags"]),
            dropped=tuple(Dropped(int(d["source"]), d["reason"]) for d in data["dropped"]),
        )

    @property
    def gloss_text(self) -> str:
        return " ".join(g.gloss for g in self.glosses)


def tags_for(features: SentenceFeatures) -> tuple[str, ...]:
    """Sentence-level tags, always in the order tense, NEG, Q/COND, EMPH."""
    tags = []
    if features.tense in TENSE_TAGS:
        tags.append(TENSE_TAGS[features.tense])
    if features.polarity is Polarity.NEGATIVE:
        tags.append("NEG")
    if features.mood is Mood.INTERROGATIVE:
        tags.append(f"Q:{features.question_label}")
    elif features.mood is Mood.CONDITIONAL:
        tags.append("COND")
    if features.emphasis:
        tags.append("EMPH")
    return tuple(tags)


def _check_pairing(sentence: Sentence, analyses: Sequence[Analysis], features: SentenceFeatures) -> None:
    word_positions = sentence.word_indices
    if len(analyses) != len(word_positions):
        raise UsageError(f"{len(analyses)} analyses for {len(word_positions)} word tokens")
    for a, pos in zip(analyses, word_positions):
        if a.position != pos or a.token != sentence.tokens[pos]:
            raise UsageError(f"analysis for {a.token.surface!r} is not aligned with the sentence")
    for ev in features.evidence:
        if not 0 <= ev.index < len(sentence.tokens):
            raise UsageError(f"evidence index {ev.index} is outside the sentence")
    surfaces = [t.surface for t in sentence.tokens]
    if features.polarity is Polarity.NEGATIVE and features.negation_particle not in surfaces:
        raise UsageError("features name a negation particle absent from the sentence")
    if any(w not in surfaces for w in features.emphasis):
        raise UsageError("features name emphasis words absent from the sentence")


def generate_gloss(
    sentence: Sentence,
    analyses: Sequence[Analysis],
    features: SentenceFeatures,
    rules: RuleSet = DEFAULT_RULES,
) -> GlossSentence:
    """Turn an analysed sentence into glosses plus sentence tags.

    Source order is kept. Negation and conditional particles live only in
    the tags; question words and emphasis words are glossed as well as
    tagged. Every token ends up either glossed or listed in ``dropped``.
    """
    _check_pairing(sentence, analyses, features)
    by_position = {a.position: a for a in analyses}
    glosses: list[GlossToken] = []
    dropped: list[Dropped] = []
    for i, tok in enumerate(sentence.tokens):
        if not tok.is_word:
            dropped.append(Dropped(i, PUNCTUATION))
            continue
        a = by_position[i]
        category = rules.category_of(tok.surface)
        if category == "question-adverb":
            glosses.append(GlossToken(a.lemma, i, GlossRole.QUESTION_WORD))
        elif category == "emphasis":
            glosses.append(GlossToken(a.lemma, i, GlossRole.EMPHASIS))
        elif category is not None:
            dropped.append(Dropped(i, ABSORBED))
        elif a.pos in CONTENT_POS:
            glosses.append(GlossToken(a.lemma, i, GlossRole.CONTENT))
        elif a.pos is POS.PRONOUN:
            dropped.append(Dropped(i, PRONOUN))
        else:
            dropped.append(Dropped(i, ABSORBED))
    return GlossSentence(tuple(glosses), tags_for(features), tuple(dropped))


def render(gloss: GlossSentence, fmt: RenderFormat | str = RenderFormat.INLINE) -> str:
    """Render one gloss sentence as a single line (no trailing newline).

    >>> g = GlossSentence((GlossToken("ذهب", 1),), ("FUTURE", "NEG"), (Dropped(0, ABSORBED),))
    >>> render(g)
    '[FUTURE][NEG] ذهب'
    """
    fmt = RenderFormat(fmt)
    if fmt is RenderFormat.JSON:
        return json.dumps(gloss.to_dict(), ensure_ascii=False)
    if fmt is RenderFormat.TSV:
        return f"{gloss.gloss_text}\t{','.join(gloss.tags)}"
    prefix = "".join(f"[{t}]" for t in gloss.tags)
    return " ".join(part for part in (prefix, gloss.gloss_text) if part)


def parse_json(text: str) -> GlossSentence:
    return GlossSentence.from_dict(json.loads(text))
