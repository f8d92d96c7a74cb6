"""Normalization, tokenization and sentence splitting for Modern Standard Arabic.

Offsets are Python string indices (Unicode code points) into the normalized
text, never bytes.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

# fathatan .. sukun
DIACRITICS_RE = re.compile("[\u064b-\u0652]")
TATWEEL = "\u0640"

PUNCTUATION = frozenset("\u061f?\u060c,.!:")
TERMINATORS = frozenset("\u061f?.!")

# Letters of the Arabic blocks, plus the combining marks that normalization
# leaves in place so they stay word-internal instead of splitting a word.
_ARABIC_LETTERS = (
    "\u0621-\u063a\u0641-\u064a\u066e\u066f\u0671-\u06d3\u06d5"
    "\u06ee\u06ef\u06fa-\u06fc\u06ff\u0750-\u077f\u08a0-\u08c9"
    "\ufb50-\ufdfb\ufe70-\ufefc"
)
_ARABIC_MARKS = "\u0610-\u061a\u0653-\u065f\u0670\u06d6-\u06ed"
WORD_RE = re.compile(f"[{_ARABIC_LETTERS}][{_ARABIC_LETTERS}{_ARABIC_MARKS}]*")


class TokenKind(enum.Enum):
    WORD = "Word"
    PUNCTUATION = "Punctuation"


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int
    kind: TokenKind

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    terminator: Token | None = None
    # word tokens cached for alignment with per-word analyses
    words: tuple[Token, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.terminator is not None and (not self.tokens or self.tokens[-1] != self.terminator):
            raise ValueError("terminator must be the final token of the sentence")
        words = tuple(t for t in self.tokens if t.is_word)
        if not words:
            raise ValueError("a sentence needs at least one word token")
        object.__setattr__(self, "words", words)

    @property
    def word_indices(self) -> list[int]:
        return [i for i, t in enumerate(self.tokens) if t.is_word]

    @property
    def text(self) -> str:
        return " ".join(t.surface for t in self.tokens)


def strip_diacritics(text: str) -> str:
    return DIACRITICS_RE.sub("", text)


def normalize(raw: str) -> str:
    """Strip harakat and tatweel, then collapse and trim whitespace.

    Hamza-bearing alef forms are kept as written: the present-tense prefix
    rule keys on initial أ.

    >>> normalize("كَتَبَ")
    'كتب'
    >>> normalize("لن  أذهب ")
    'لن أذهب'
    """
    text = strip_diacritics(raw).replace(TATWEEL, "")
    return " ".join(text.split())


def tokenize(text: str) -> list[Token]:
    """Split normalized text into word and punctuation tokens.

    Arabic letter runs form one word; every inventory punctuation mark is
    its own token; any other non-space character (Latin, digits, symbols)
    becomes a one-character word token.
    """
    tokens: list[Token] = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in PUNCTUATION:
            tokens.append(Token(ch, pos, pos + 1, TokenKind.PUNCTUATION))
            pos += 1
            continue
        m = WORD_RE.match(text, pos)
        end = m.end() if m else pos + 1
        tokens.append(Token(text[pos:end], pos, end, TokenKind.WORD))
        pos = end
    return tokens


def split_sentences(tokens: list[Token]) -> list[Sentence]:
    """Group tokens into sentences, cutting after each terminator.

    Fragments without any word token (stray punctuation) are dropped, since
    a sentence must contain a word.
    """
    sentences: list[Sentence] = []
    current: list[Token] = []

    def flush(terminator: Token | None) -> None:
        if any(t.is_word for t in current):
            sentences.append(Sentence(tuple(current), terminator))
        current.clear()

    for tok in tokens:
        current.append(tok)
        if tok.kind is TokenKind.PUNCTUATION and tok.surface in TERMINATORS:
            flush(tok)
    flush(None)
    return sentences


def segment(raw: str) -> list[Sentence]:
    """normalize -> tokenize -> split_sentences in one call."""
    return split_sentences(tokenize(normalize(raw)))
