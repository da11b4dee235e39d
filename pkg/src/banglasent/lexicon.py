"""Lexicon data dictionary: signed polarity maps plus the special word lists
(negation, extreme, phrase-initiator, and-word, stop-word, double-negation
idioms) that drive every scoring decision."""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Mapping

# ZWNJ/ZWJ are dropped so that visually identical Bengali forms compare equal.
_ZERO_WIDTH = dict.fromkeys((0x200C, 0x200D))

_SCHEMA_KEYS = (
    "positive",
    "negative",
    "negation_words",
    "extreme_words",
    "phrase_initiators",
    "and_words",
    "stop_words",
    "double_negation_idioms",
)


class LexiconError(ValueError):
    """Raised when a lexicon document is malformed or violates an invariant."""


def normalize_word(word: str) -> str:
    """NFC-normalize, strip zero-width joiners and surrounding whitespace."""
    return unicodedata.normalize("NFC", word).translate(_ZERO_WIDTH).strip()


class RoleKind(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEGATION = "negation"
    EXTREME = "extreme"
    PHRASE_INITIATOR = "phrase_initiator"
    AND_WORD = "and_word"
    STOP_WORD = "stop_word"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TokenRole:
    """Role of one token under one lexicon; exactly one per lookup."""

    kind: RoleKind
    score: float | None = None

    @property
    def is_sentiment(self) -> bool:
        return self.kind in (RoleKind.POSITIVE, RoleKind.NEGATIVE)


@dataclass(frozen=True)
class LexiconEntry:
    word: str
    score: float


@dataclass(frozen=True)
class LexiconDataDictionary:
    """Immutable word lists and polarity maps. Safe to share across workers."""

    positive: dict[str, float] = field(default_factory=dict)
    negative: dict[str, float] = field(default_factory=dict)
    negation_words: frozenset[str] = frozenset()
    extreme_words: frozenset[str] = frozenset()
    phrase_initiators: frozenset[str] = frozenset()
    and_words: frozenset[str] = frozenset()
    stop_words: frozenset[str] = frozenset()
    double_negation_idioms: tuple[tuple[str, ...], ...] = ()

    def all_words(self) -> set[str]:
        words: set[str] = set()
        words.update(self.positive, self.negative, self.negation_words)
        words.update(self.extreme_words, self.phrase_initiators)
        words.update(self.and_words, self.stop_words)
        return words


def lookup_role(token: str, ldd: LexiconDataDictionary) -> TokenRole:
    """Resolve a token's role. Precedence (defensive; moot for a valid LDD):
    Negation > AndWord > PhraseInitiator > Extreme > Positive > Negative >
    StopWord > Unknown. Total function: unknown tokens get UNKNOWN."""
    if token in ldd.negation_words:
        return TokenRole(RoleKind.NEGATION)
    if token in ldd.and_words:
        return TokenRole(RoleKind.AND_WORD)
    if token in ldd.phrase_initiators:
        return TokenRole(RoleKind.PHRASE_INITIATOR)
    if token in ldd.extreme_words:
        return TokenRole(RoleKind.EXTREME)
    if token in ldd.positive:
        return TokenRole(RoleKind.POSITIVE, ldd.positive[token])
    if token in ldd.negative:
        return TokenRole(RoleKind.NEGATIVE, ldd.negative[token])
    if token in ldd.stop_words:
        return TokenRole(RoleKind.STOP_WORD)
    return TokenRole(RoleKind.UNKNOWN)


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_word(word: str, where: str, out: list[str]) -> None:
    if not word:
        out.append(f"empty word in {where} (empty after normalization)")
    elif any(ch.isspace() for ch in word):
        out.append(f"word {word!r} in {where} contains internal whitespace")


def validate_ldd(ldd: LexiconDataDictionary) -> ValidationReport:
    """List every invariant violation (empty report when valid)."""
    report = ValidationReport()
    v = report.violations

    for word, score in ldd.positive.items():
        _check_word(word, "positive", v)
        if not (0 < score <= 1):
            v.append(f"range: positive word {word!r} has score {score} outside (0, 1]")
    for word, score in ldd.negative.items():
        _check_word(word, "negative", v)
        if not (-1 <= score < 0):
            v.append(f"range: negative word {word!r} has score {score} outside [-1, 0)")

    lists: list[tuple[str, Iterable[str]]] = [
        ("positive", ldd.positive),
        ("negative", ldd.negative),
        ("negation_words", ldd.negation_words),
        ("extreme_words", ldd.extreme_words),
        ("phrase_initiators", ldd.phrase_initiators),
        ("and_words", ldd.and_words),
        ("stop_words", ldd.stop_words),
    ]
    for name, words in lists[2:]:
        for word in words:
            _check_word(word, name, v)

    seen: dict[str, str] = {}
    for name, words in lists:
        for word in words:
            if word in seen and seen[word] != name:
                v.append(f"overlap: word {word!r} appears in both {seen[word]} and {name}")
            else:
                seen.setdefault(word, name)

    for idiom in ldd.double_negation_idioms:
        shown = " ".join(idiom)
        if len(idiom) < 2:
            v.append(f"idiom {shown!r} has fewer than two words")
        for word in idiom:
            _check_word(word, f"idiom {shown!r}", v)
        if idiom and idiom[-1] not in ldd.negation_words:
            v.append(f"idiom {shown!r} does not end with a negation word")

    return report


def _normalized_map(raw: Mapping[str, Any], section: str, warnings: list[str]) -> dict[str, float]:
    out: dict[str, float] = {}
    for word, score in raw.items():
        if not isinstance(score, (int, float)) or isinstance(score, bool):
            raise LexiconError(f"schema: score for {word!r} in {section} is not a number")
        norm = normalize_word(word)
        if norm in out:
            warnings.append(f"duplicate word {norm!r} in {section}; last occurrence wins")
        out[norm] = float(score)
    return out


def _normalized_set(raw: Iterable[Any], section: str, warnings: list[str]) -> frozenset[str]:
    out: set[str] = set()
    for word in raw:
        if not isinstance(word, str):
            raise LexiconError(f"schema: entry {word!r} in {section} is not a string")
        norm = normalize_word(word)
        if norm in out:
            warnings.append(f"duplicate word {norm!r} in {section}; collapsed")
        out.add(norm)
    return frozenset(out)


def parse_ldd(doc: Mapping[str, Any]) -> tuple[LexiconDataDictionary, list[str]]:
    """Build and validate a dictionary from a parsed lexicon document.

    Missing sections default to empty; unknown sections are schema errors.
    Duplicate words within one list collapse (last wins) and are returned as
    warnings; any invariant violation raises LexiconError naming the
    offending word.
    """
    if not isinstance(doc, Mapping):
        raise LexiconError("schema: lexicon document must be a JSON object")
    unknown = set(doc) - set(_SCHEMA_KEYS)
    if unknown:
        raise LexiconError(f"schema: unknown section(s) {sorted(unknown)}")
    for key in ("positive", "negative"):
        if key in doc and not isinstance(doc[key], Mapping):
            raise LexiconError(f"schema: section {key!r} must be an object of word -> score")
    for key in _SCHEMA_KEYS[2:]:
        if key in doc and not isinstance(doc[key], list):
            raise LexiconError(f"schema: section {key!r} must be a list")

    warnings: list[str] = []
    idioms = []
    for idiom in doc.get("double_negation_idioms", []):
        if not isinstance(idiom, list) or not all(isinstance(w, str) for w in idiom):
            raise LexiconError("schema: each double_negation_idiom must be a list of words")
        idioms.append(tuple(normalize_word(w) for w in idiom))

    ldd = LexiconDataDictionary(
        positive=_normalized_map(doc.get("positive", {}), "positive", warnings),
        negative=_normalized_map(doc.get("negative", {}), "negative", warnings),
        negation_words=_normalized_set(doc.get("negation_words", []), "negation_words", warnings),
        extreme_words=_normalized_set(doc.get("extreme_words", []), "extreme_words", warnings),
        phrase_initiators=_normalized_set(
            doc.get("phrase_initiators", []), "phrase_initiators", warnings
        ),
        and_words=_normalized_set(doc.get("and_words", []), "and_words", warnings),
        stop_words=_normalized_set(doc.get("stop_words", []), "stop_words", warnings),
        double_negation_idioms=tuple(idioms),
    )
    report = validate_ldd(ldd)
    if not report.ok:
        raise LexiconError("invalid lexicon:\n" + "\n".join(report.violations))
    return ldd, warnings


def ldd_from_document(doc: Mapping[str, Any]) -> LexiconDataDictionary:
    return parse_ldd(doc)[0]


def load_ldd(path: str | Path) -> LexiconDataDictionary:
    """Load and validate a lexicon JSON file (UTF-8)."""
    return load_ldd_with_warnings(path)[0]


def load_ldd_with_warnings(path: str | Path) -> tuple[LexiconDataDictionary, list[str]]:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LexiconError(f"schema: {path} is not valid JSON: {exc}") from exc
    return parse_ldd(doc)


def serialize_ldd(ldd: LexiconDataDictionary) -> str:
    """Canonical JSON text; load_ldd(serialize_ldd(x)) preserves every lookup."""
    doc = {
        "positive": dict(sorted(ldd.positive.items())),
        "negative": dict(sorted(ldd.negative.items())),
        "negation_words": sorted(ldd.negation_words),
        "extreme_words": sorted(ldd.extreme_words),
        "phrase_initiators": sorted(ldd.phrase_initiators),
        "and_words": sorted(ldd.and_words),
        "stop_words": sorted(ldd.stop_words),
        "double_negation_idioms": [list(i) for i in ldd.double_negation_idioms],
    }
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def dump_ldd(ldd: LexiconDataDictionary, path: str | Path) -> None:
    Path(path).write_text(serialize_ldd(ldd), encoding="utf-8")


def bundled_lexicon_path() -> Path:
    """Path of the starter lexicon shipped with the package."""
    return Path(__file__).parent / "data" / "starter_lexicon.json"
