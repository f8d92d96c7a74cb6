"""Sentence-level tense, mood, polarity and emphasis detection.

Every detector returns its value together with evidence triples
``(feature, token index, rule name)``; token indices point into the
sentence's full token list, punctuation included.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .arabic_text import Sentence
from .morphology import Analysis, VerbPrefix
from .rules import DEFAULT_RULES, RuleSet, Tense

MARK_ONLY_LABEL = "YES-NO"


class Mood(enum.Enum):
    DECLARATIVE = "Declarative"
    INTERROGATIVE = "Interrogative"
    CONDITIONAL = "Conditional"


class Polarity(enum.Enum):
    AFFIRMATIVE = "Affirmative"
    NEGATIVE = "Negative"


class Evidence(NamedTuple):
    feature: str
    index: int
    rule: str


@dataclass(frozen=True)
class SentenceFeatures:
    tense: Tense = Tense.UNSPECIFIED
    mood: Mood = Mood.DECLARATIVE
    question_label: str | None = None
    polarity: Polarity = Polarity.AFFIRMATIVE
    negation_particle: str | None = None
    emphasis: tuple[str, ...] = ()
    evidence: tuple[Evidence, ...] = field(default=(), compare=False)

    @property
    def mood_text(self) -> str:
        if self.mood is Mood.INTERROGATIVE:
            return f"Interrogative({self.question_label})"
        return self.mood.value

    @property
    def polarity_text(self) -> str:
        if self.polarity is Polarity.NEGATIVE:
            return f"Negative({self.negation_particle})"
        return self.polarity.value


def detect_tense(
    analyses: Sequence[Analysis], rules: RuleSet = DEFAULT_RULES
) -> tuple[Tense, list[Evidence]]:
    # negation particle > future prefix > present prefix > any verb (past)
    for a in analyses:
        tense = rules.negation_particles.get(a.token.surface)
        if tense is not None:
            return tense, [Evidence("tense", a.position, "negation-particle")]
    for prefix, tense, rule in (
        (VerbPrefix.FUTURE, Tense.FUTURE, "future-prefix"),
        (VerbPrefix.PRESENT, Tense.PRESENT, "present-prefix"),
    ):
        for a in analyses:
            if a.is_verb and a.verb_prefix is prefix:
                return tense, [Evidence("tense", a.position, rule)]
    for a in analyses:
        if a.is_verb:
            return Tense.PAST, [Evidence("tense", a.position, "default-past")]
    return Tense.UNSPECIFIED, []


def detect_polarity(
    analyses: Sequence[Analysis], rules: RuleSet = DEFAULT_RULES
) -> tuple[Polarity, str | None, list[Evidence]]:
    for a in analyses:
        if a.token.surface in rules.negation_particles:
            return Polarity.NEGATIVE, a.token.surface, [Evidence("polarity", a.position, "negation-particle")]
    return Polarity.AFFIRMATIVE, None, []


def detect_mood(
    sentence: Sentence, analyses: Sequence[Analysis], rules: RuleSet = DEFAULT_RULES
) -> tuple[Mood, str | None, list[Evidence]]:
    evidence: list[Evidence] = []
    term = sentence.terminator
    if term is not None and term.surface in rules.question_marks:
        evidence.append(Evidence("mood", len(sentence.tokens) - 1, "question-mark"))
    adverb = next((a for a in analyses if a.token.surface in rules.question_adverbs), None)
    if adverb is not None:
        evidence.append(Evidence("mood", adverb.position, "question-adverb"))
        return Mood.INTERROGATIVE, rules.question_adverbs[adverb.token.surface], evidence
    if evidence:
        return Mood.INTERROGATIVE, MARK_ONLY_LABEL, evidence

    for a in analyses:
        if a.token.surface in rules.conditional_particles:
            return Mood.CONDITIONAL, None, [Evidence("mood", a.position, "conditional-particle")]
    return Mood.DECLARATIVE, None, []


def detect_emphasis(
    analyses: Sequence[Analysis], rules: RuleSet = DEFAULT_RULES
) -> tuple[list[str], list[Evidence]]:
    found = [a for a in analyses if a.token.surface in rules.emphasis_words]
    return (
        [a.token.surface for a in found],
        [Evidence("emphasis", a.position, "emphasis-word") for a in found],
    )


def extract_features(
    sentence: Sentence, analyses: Sequence[Analysis], rules: RuleSet = DEFAULT_RULES
) -> SentenceFeatures:
    tense, tense_ev = detect_tense(analyses, rules)
    mood, label, mood_ev = detect_mood(sentence, analyses, rules)
    polarity, particle, pol_ev = detect_polarity(analyses, rules)
    emphasis, emph_ev = detect_emphasis(analyses, rules)
    return SentenceFeatures(
        tense=tense,
        mood=mood,
        question_label=label,
        polarity=polarity,
        negation_particle=particle,
        emphasis=tuple(emphasis),
        evidence=tuple(tense_ev + mood_ev + pol_ev + emph_ev),
    )
