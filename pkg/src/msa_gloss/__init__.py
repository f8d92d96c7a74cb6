"""Rule-based Modern Standard Arabic to sign-language gloss transpiler."""

from .arabic_text import Sentence, Token, TokenKind, normalize, segment, split_sentences, tokenize
from .errors import GlossError, GoldParseError, LexiconError, RuleSetError, UsageError
from .evaluation import EvalReport, GoldRecord, evaluate, load_gold
from .features import Mood, Polarity, SentenceFeatures, extract_features
from .gloss import GlossSentence, GlossToken, RenderFormat, generate_gloss, parse_json, render
from .morphology import Analysis, Lexicon, analyze_sentence, analyze_token, load_default_lexicon, load_lexicon
from .pipeline import Translator, run_pipeline
from .rules import DEFAULT_RULES, RuleSet, Tense, load_rules

__version__ = "0.1.0"
