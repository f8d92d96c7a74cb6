"""Brute-force trigger scanner used as an independent check on the engine.

Shares no code with msa_gloss: it reads the lexicon TSV itself, splits on
whitespace and punctuation, and scans the word list once per trigger
category using its own copy of the trigger tables.
"""

import re

NEGATION = {"لا": "Present", "ليس": "Present", "لن": "Future", "لم": "Past"}
QUESTION = {"هل": "YES-NO", "من": "WHO", "أين": "WHERE", "متى": "WHEN", "ماذا": "WHAT", "كيف": "HOW"}
CONDITIONAL = {"إذا", "لو"}
EMPHASIS = {"جدا", "مرارا"}
FUTURE_LETTER = "س"
PRESENT_LETTERS = "تنيأ"

_DROP = {chr(c) for c in range(0x064B, 0x0653)} | {"ـ"}
_SPLIT = re.compile(r"[\s؟?،,.!:]+")
_RANK = ["Verb", "Particle", "Adverb", "Noun", "Adjective", "Pronoun", "Other"]


def read_lexicon(path):
    table = {}
    with open(path, encoding="utf-8") as fh:
        for n, line in enumerate(fh):
            if line.startswith("#") or not line.strip():
                continue
            surface, _lemma, pos, kind = line.rstrip("\n").split("\t")
            table.setdefault(surface, []).append((_RANK.index(pos), n, pos, kind))
    return table


def _verb_reading(word, lex):
    """(is_verb, prefix) where prefix is 'future', 'present' or None."""
    rows = lex.get(word)
    if rows:
        _, _, pos, kind = min(rows)
        present = kind == "ImperfectiveStem" and word[0] in PRESENT_LETTERS
        return pos == "Verb", ("present" if present else None)

    def imperfective(w):
        return any(r[3] == "ImperfectiveStem" for r in lex.get(w, []))

    if word[0] == FUTURE_LETTER and imperfective(word[1:]):
        return True, "future"
    if word[0] in PRESENT_LETTERS and imperfective(word[1:]):
        return True, "present"
    return False, None


def scan(text, lex):
    """Features of a single sentence as plain strings."""
    clean = "".join(ch for ch in text if ch not in _DROP).strip()
    asks = clean[-1:] in ("?", "؟")
    words = [w for w in _SPLIT.split(clean) if w]
    readings = [_verb_reading(w, lex) for w in words]

    negs = [w for w in words if w in NEGATION]
    if negs:
        tense = NEGATION[negs[0]]
    elif any(v and p == "future" for v, p in readings):
        tense = "Future"
    elif any(v and p == "present" for v, p in readings):
        tense = "Present"
    elif any(v for v, _ in readings):
        tense = "Past"
    else:
        tense = "Unspecified"

    adverbs = [w for w in words if w in QUESTION]
    if adverbs:
        mood = f"Interrogative({QUESTION[adverbs[0]]})"
    elif asks:
        mood = "Interrogative(YES-NO)"
    elif any(w in CONDITIONAL for w in words):
        mood = "Conditional"
    else:
        mood = "Declarative"

    return {
        "tense": tense,
        "mood": mood,
        "polarity": f"Negative({negs[0]})" if negs else "Affirmative",
        "emphasis": [w for w in words if w in EMPHASIS],
    }
