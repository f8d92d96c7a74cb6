import pytest

from msa_gloss.arabic_text import Token, TokenKind, segment
from msa_gloss.errors import LexiconError, UsageError
from msa_gloss.morphology import (
    POS,
    Lexicon,
    LexiconEntry,
    StemKind,
    VerbPrefix,
    analyze_sentence,
    analyze_token,
    load_lexicon,
    parse_lexicon,
)
from msa_gloss.rules import RuleSet


def word(surface):
    return Token(surface, 0, len(surface), TokenKind.WORD)


@pytest.fixture
def small_lexicon():
    return parse_lexicon(["يذهب\tذهب\tVerb\tImperfectiveStem"])


def test_load_one_row(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("كتب\tكتب\tVerb\tPerfectiveStem\n", encoding="utf-8")
    lex = load_lexicon(p)
    assert len(lex) == 1
    (entry,) = lex.lookup("كتب")
    assert entry == LexiconEntry("كتب", "كتب", POS.VERB, StemKind.PERFECTIVE, 1)
    assert lex.source_path == str(p)


def test_load_empty_and_comments(tmp_path):
    p = tmp_path / "lex.tsv"
    p.write_text("", encoding="utf-8")
    assert len(load_lexicon(p)) == 0
    assert len(parse_lexicon(["# header", "", "  "])) == 0


def test_two_column_row_is_line_1_error():
    with pytest.raises(LexiconError) as exc:
        parse_lexicon(["كتب\tVerb"], "lex.tsv")
    assert exc.value.line == 1
    assert "lex.tsv:1" in str(exc.value)


@pytest.mark.parametrize(
    "row, needle",
    [
        ("كتب\tكتب\tVerbb\tPerfectiveStem", "'Verbb'"),
        ("كتب\t\tVerb\tPerfectiveStem", "empty"),
        ("كتب\tكتب\tVerb\tStem", "'Stem'"),
        ("كتب\tكتب\tNoun\tPerfectiveStem", "does not agree"),
        ("كتب\tكتب\tVerb\tNotAVerbStem", "does not agree"),
    ],
)
def test_bad_rows(row, needle):
    with pytest.raises(LexiconError) as exc:
        parse_lexicon(["# ok", row])
    assert exc.value.line == 2
    assert needle in str(exc.value)


def test_missing_file(tmp_path):
    with pytest.raises(LexiconError) as exc:
        load_lexicon(tmp_path / "nope.tsv")
    assert "nope.tsv" in str(exc.value)


def test_duplicates_kept_and_ranked():
    lex = parse_lexicon(
        [
            "درس\tدرس\tNoun\tNotAVerbStem",
            "درس\tدرس\tVerb\tPerfectiveStem",
            "درس\tدرس\tVerb\tImperfectiveStem",
        ]
    )
    readings = lex.lookup("درس")
    assert [(e.pos, e.stem_kind) for e in readings] == [
        (POS.VERB, StemKind.PERFECTIVE),
        (POS.VERB, StemKind.IMPERFECTIVE),
        (POS.NOUN, StemKind.NOT_A_VERB),
    ]


def test_future_prefix(small_lexicon):
    a = analyze_token(word("سيذهب"), small_lexicon)
    assert (a.pos, a.verb_prefix, a.lemma) == (POS.VERB, VerbPrefix.FUTURE, "ذهب")


def test_present_prefix_exact(small_lexicon):
    a = analyze_token(word("يذهب"), small_lexicon)
    assert (a.pos, a.verb_prefix, a.lemma) == (POS.VERB, VerbPrefix.PRESENT, "ذهب")


def test_unknown_word(small_lexicon):
    a = analyze_token(word("قلم"), small_lexicon)
    assert (a.pos, a.lemma, a.verb_prefix, a.matched_entry) == (POS.OTHER, "قلم", VerbPrefix.NONE, None)


def test_present_prefix_by_stripping():
    lex = parse_lexicon(["رسم\tرسم\tVerb\tImperfectiveStem"])
    for surface in ("يرسم", "ترسم", "نرسم", "أرسم"):
        a = analyze_token(word(surface), lex)
        assert a.verb_prefix is VerbPrefix.PRESENT and a.lemma == "رسم"


def test_prefix_needs_lexicon_confirmation():
    # س-initial word whose remainder is only a noun/perfective reading
    lex = parse_lexicon(["يارة\tيارة\tNoun\tNotAVerbStem", "افر\tافر\tVerb\tPerfectiveStem"])
    for surface in ("سيارة", "سافر", "تفاحة"):
        a = analyze_token(word(surface), lex)
        assert a.verb_prefix is VerbPrefix.NONE and a.pos is POS.OTHER


def test_future_prefix_strips_exactly_one_letter():
    lex = parse_lexicon(["يذهب\tذهب\tVerb\tImperfectiveStem"])
    assert analyze_token(word("سسيذهب"), lex).pos is POS.OTHER


def test_exact_match_wins_over_stripping():
    lex = parse_lexicon(
        [
            "سافر\tسافر\tVerb\tPerfectiveStem",
            "افر\tافر\tVerb\tImperfectiveStem",
            "نجح\tنجح\tVerb\tPerfectiveStem",
            "جح\tجح\tVerb\tImperfectiveStem",
        ]
    )
    for surface in ("سافر", "نجح"):
        a = analyze_token(word(surface), lex)
        assert a.verb_prefix is VerbPrefix.NONE and a.lemma == surface


def test_exact_imperfective_without_prefix_letter():
    lex = parse_lexicon(["رسم\tرسم\tVerb\tImperfectiveStem"])
    assert analyze_token(word("رسم"), lex).verb_prefix is VerbPrefix.NONE


def test_punctuation_is_rejected(small_lexicon):
    with pytest.raises(UsageError):
        analyze_token(Token("؟", 0, 1, TokenKind.PUNCTUATION), small_lexicon)


def test_prefix_letters_come_from_rules():
    lex = parse_lexicon(["يذهب\tذهب\tVerb\tImperfectiveStem"])
    rules = RuleSet(future_prefix="ف")
    assert analyze_token(word("فيذهب"), lex, rules).verb_prefix is VerbPrefix.FUTURE
    assert analyze_token(word("سيذهب"), lex, rules).pos is POS.OTHER


def test_analyze_sentence_positions_skip_punctuation(lexicon):
    (sent,) = segment("إذا درست، نجحت")
    analyses = analyze_sentence(sent, lexicon)
    assert [a.position for a in analyses] == [0, 1, 3]


def test_seed_lexicon_size_and_coverage(lexicon, gold):
    assert len(lexicon) >= 100
    for rec in gold:
        for sent in segment(rec.source):
            for tok in sent.tokens:
                if tok.is_word:
                    a = analyze_token(tok, lexicon)
                    assert a.matched_entry is not None, tok.surface


def test_lexicon_is_read_only():
    lex = Lexicon([LexiconEntry("كتب", "كتب", POS.VERB, StemKind.PERFECTIVE)])
    with pytest.raises(TypeError):
        lex._entries["x"] = ()
