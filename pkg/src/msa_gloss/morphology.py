"""Lexicon-backed lemma / part-of-speech lookup with verb-prefix detection.

Lexicon files are UTF-8 TSV with four columns::

    surface-or-stem <TAB> lemma <TAB> pos <TAB> stem-kind

``#`` starts a comment line. Several rows may share a surface; they are
alternative readings, ranked by part of speech and then file order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .arabic_text import Sentence, Token
from .errors import LexiconError, UsageError
from .rules import DEFAULT_RULES, RuleSet


class POS(enum.Enum):
    VERB = "Verb"
    NOUN = "Noun"
    PARTICLE = "Particle"
    ADVERB = "Adverb"
    ADJECTIVE = "Adjective"
    PRONOUN = "Pronoun"
    OTHER = "Other"


class StemKind(enum.Enum):
    PERFECTIVE = "PerfectiveStem"
    IMPERFECTIVE = "ImperfectiveStem"
    NOT_A_VERB = "NotAVerbStem"


class VerbPrefix(enum.Enum):
    NONE = "None"
    FUTURE = "FuturePrefix"
    PRESENT = "PresentPrefix"


# Tie-break between readings of one surface; lower wins.
POS_PRIORITY = {
    POS.VERB: 0,
    POS.PARTICLE: 1,
    POS.ADVERB: 2,
    POS.NOUN: 3,
    POS.ADJECTIVE: 4,
    POS.PRONOUN: 5,
    POS.OTHER: 6,
}


@dataclass(frozen=True)
class LexiconEntry:
    surface: str
    lemma: str
    pos: POS
    stem_kind: StemKind
    line: int = 0

    def __post_init__(self) -> None:
        if not self.surface or not self.lemma:
            raise ValueError("lexicon entry needs a surface and a lemma")
        if (self.pos is POS.VERB) == (self.stem_kind is StemKind.NOT_A_VERB):
            raise ValueError(f"pos {self.pos.value} does not agree with stem kind {self.stem_kind.value}")


class Lexicon:
    """Immutable multi-map from surface to readings, ranked at load time."""

    def __init__(self, entries: Iterable[LexiconEntry] = (), source_path: str | None = None):
        table: dict[str, list[LexiconEntry]] = {}
        for entry in entries:
            table.setdefault(entry.surface, []).append(entry)
        # sort is stable, so file order survives within a POS
        self._entries: Mapping[str, tuple[LexiconEntry, ...]] = MappingProxyType(
            {k: tuple(sorted(v, key=lambda e: POS_PRIORITY[e.pos])) for k, v in table.items()}
        )
        self.source_path = source_path

    def __len__(self) -> int:
        return sum(len(v) for v in self._entries.values())

    def __contains__(self, surface: str) -> bool:
        return surface in self._entries

    def __iter__(self):
        for readings in self._entries.values():
            yield from readings

    def surfaces(self) -> list[str]:
        return list(self._entries)

    def lookup(self, surface: str) -> tuple[LexiconEntry, ...]:
        """All readings of ``surface``, best first."""
        return self._entries.get(surface, ())

    def imperfective(self, surface: str) -> LexiconEntry | None:
        for entry in self._entries.get(surface, ()):
            if entry.stem_kind is StemKind.IMPERFECTIVE:
                return entry
        return None


def parse_lexicon(lines: Iterable[str], path: str | None = None) -> Lexicon:
    entries = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 4:
            raise LexiconError(f"expected 4 tab-separated columns, got {len(cols)}", path, lineno)
        surface, lemma, pos_label, stem_label = (c.strip() for c in cols)
        if not surface or not lemma or not pos_label or not stem_label:
            raise LexiconError("empty mandatory field", path, lineno)
        try:
            pos = POS(pos_label)
        except ValueError:
            raise LexiconError(f"unknown part of speech {pos_label!r}", path, lineno) from None
        try:
            stem_kind = StemKind(stem_label)
        except ValueError:
            raise LexiconError(f"unknown stem kind {stem_label!r}", path, lineno) from None
        try:
            entries.append(LexiconEntry(surface, lemma, pos, stem_kind, lineno))
        except ValueError as exc:
            raise LexiconError(str(exc), path, lineno) from None
    return Lexicon(entries, path)


def load_lexicon(path: str | Path) -> Lexicon:
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as fh:
            return parse_lexicon(fh, str(path))
    except OSError as exc:
        raise LexiconError(f"cannot read lexicon ({exc.strerror or exc})", str(path)) from None
    except UnicodeDecodeError:
        raise LexiconError("lexicon is not valid UTF-8", str(path)) from None


def default_lexicon_path() -> Path:
    return Path(str(resources.files("msa_gloss") / "data" / "lexicon.tsv"))


def load_default_lexicon() -> Lexicon:
    return load_lexicon(default_lexicon_path())


@dataclass(frozen=True)
class Analysis:
    token: Token
    lemma: str
    pos: POS
    verb_prefix: VerbPrefix = VerbPrefix.NONE
    matched_entry: LexiconEntry | None = None
    # index of the token within its sentence's token list
    position: int = 0

    @property
    def is_verb(self) -> bool:
        return self.pos is POS.VERB

    def to_dict(self) -> dict:
        entry = self.matched_entry
        return {
            "surface": self.token.surface,
            "start": self.token.start,
            "end": self.token.end,
            "position": self.position,
            "lemma": self.lemma,
            "pos": self.pos.value,
            "verb_prefix": self.verb_prefix.value,
            "entry": None
            if entry is None
            else {
                "surface": entry.surface,
                "lemma": entry.lemma,
                "pos": entry.pos.value,
                "stem_kind": entry.stem_kind.value,
                "line": entry.line,
            },
        }


def analyze_token(
    token: Token, lexicon: Lexicon, rules: RuleSet = DEFAULT_RULES, position: int = 0
) -> Analysis:
    """Assign lemma, POS and verb prefix to one word token.

    First match wins: an exact lexicon entry; the future prefix followed by
    an imperfective stem; a present prefix with the whole surface or the
    rest being an imperfective stem; otherwise the surface itself, POS Other.
    Prefix readings need lexicon confirmation, so nouns such as سيارة are not
    mistaken for future verbs.
    """
    if not token.is_word:
        raise UsageError(f"cannot analyze punctuation token {token.surface!r}")
    surface = token.surface

    readings = lexicon.lookup(surface)
    if readings:
        best = readings[0]
        prefix = VerbPrefix.NONE
        if best.stem_kind is StemKind.IMPERFECTIVE and surface[0] in rules.present_prefixes:
            prefix = VerbPrefix.PRESENT
        return Analysis(token, best.lemma, best.pos, prefix, best, position)

    rest = surface[1:]
    if surface[0] == rules.future_prefix and rest:
        stem = lexicon.imperfective(rest)
        if stem is not None:
            return Analysis(token, stem.lemma, POS.VERB, VerbPrefix.FUTURE, stem, position)

    if surface[0] in rules.present_prefixes:
        stem = lexicon.imperfective(surface) or (lexicon.imperfective(rest) if rest else None)
        if stem is not None:
            return Analysis(token, stem.lemma, POS.VERB, VerbPrefix.PRESENT, stem, position)

    return Analysis(token, surface, POS.OTHER, VerbPrefix.NONE, None, position)


def analyze_sentence(
    sentence: Sentence, lexicon: Lexicon, rules: RuleSet = DEFAULT_RULES
) -> list[Analysis]:
    """Analyses for the sentence's word tokens, punctuation skipped."""
    return [
        analyze_token(tok, lexicon, rules, position=i)
        for i, tok in enumerate(sentence.tokens)
        if tok.is_word
    ]
