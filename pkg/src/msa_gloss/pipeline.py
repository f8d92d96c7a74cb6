"""Text-to-gloss pipeline: normalize, tokenize, split, analyse, extract, gloss."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .arabic_text import Sentence, segment
from .features import SentenceFeatures, extract_features
from .gloss import GlossSentence, RenderFormat, generate_gloss, render
from .morphology import Analysis, Lexicon, analyze_sentence
from .rules import DEFAULT_RULES, RuleSet


@dataclass(frozen=True)
class Translation:
    sentence: Sentence
    analyses: list[Analysis]
    features: SentenceFeatures
    gloss: GlossSentence


class Translator:
    def __init__(self, lexicon: Lexicon, rules: RuleSet = DEFAULT_RULES):
        self.lexicon = lexicon
        self.rules = rules

    def translate_sentence(self, sentence: Sentence) -> Translation:
        analyses = analyze_sentence(sentence, self.lexicon, self.rules)
        features = extract_features(sentence, analyses, self.rules)
        gloss = generate_gloss(sentence, analyses, features, self.rules)
        return Translation(sentence, analyses, features, gloss)

    def translate(self, text: str) -> list[Translation]:
        return [self.translate_sentence(s) for s in segment(text)]


def run_pipeline(
    lines: Iterable[str],
    lexicon: Lexicon,
    rules: RuleSet = DEFAULT_RULES,
    fmt: RenderFormat | str = RenderFormat.INLINE,
) -> Iterator[str]:
    """Yield one rendered record per sentence, in input order.

    Input is consumed a line at a time, so a sentence never spans a line
    break and memory stays bounded by the longest line.
    """
    translator = Translator(lexicon, rules)
    for line in lines:
        for tr in translator.translate(line):
            yield render(tr.gloss, fmt)
