"""Lexicon-driven sentiment scoring and nine-way classification for Bengali
review text, with weighted-metric evaluation and corpus export."""

__version__ = "0.1.0"

from .classify import (
    BinConfig,
    NormalizationScale,
    SentimentCategory,
    categorize,
    collapse_binary,
    fit_scale,
    normalize,
)
from .corpus import Review, ScoredReview, load_dataset, split_dataset, write_labeled
from .engine import EngineState, RuleConfig, TraceEntry, render_trace, score_review, score_tokens
from .lexicon import (
    LexiconDataDictionary,
    LexiconEntry,
    LexiconError,
    RoleKind,
    TokenRole,
    ldd_from_document,
    load_ldd,
    lookup_role,
    serialize_ldd,
    validate_ldd,
)
from .metrics import ConfusionMatrix, EvalReport, confusion, weighted_metrics
from .textproc import TokenStream, normalize_tokens, preprocess, remove_stop_words, tokenize

__all__ = [
    "BinConfig",
    "ConfusionMatrix",
    "EngineState",
    "EvalReport",
    "LexiconDataDictionary",
    "LexiconEntry",
    "LexiconError",
    "NormalizationScale",
    "Review",
    "RoleKind",
    "RuleConfig",
    "ScoredReview",
    "SentimentCategory",
    "TokenRole",
    "TokenStream",
    "TraceEntry",
    "categorize",
    "collapse_binary",
    "confusion",
    "fit_scale",
    "ldd_from_document",
    "load_dataset",
    "load_ldd",
    "lookup_role",
    "normalize",
    "normalize_tokens",
    "preprocess",
    "remove_stop_words",
    "render_trace",
    "score_review",
    "score_tokens",
    "serialize_ldd",
    "split_dataset",
    "tokenize",
    "validate_ldd",
    "weighted_metrics",
    "write_labeled",
]
