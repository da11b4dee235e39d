"""Raw review text -> filtered token stream: tokenization, normalization,
stop-word removal."""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

from .lexicon import LexiconDataDictionary, RoleKind, lookup_role, normalize_word


def _bengali_word_chars() -> str:
    # Letters and combining marks of the Bengali block plus Bengali digits;
    # vowel signs are Mn/Mc and must not split tokens.
    chars = []
    for cp in range(0x0980, 0x0A00):
        cat = unicodedata.category(chr(cp))
        if cat.startswith(("L", "M")) or cat == "Nd":
            chars.append(chr(cp))
    return "".join(chars)


# ZWNJ/ZWJ are word characters here (they occur inside Bengali conjuncts);
# normalize_tokens strips them afterwards. Bengali codepoints are safe as
# literals inside a character class; the Latin/digit ranges must stay ranges.
_WORD_CLASS = "A-Za-z0-9‌‍" + _bengali_word_chars()
_TOKEN_RE = re.compile(f"[{_WORD_CLASS}]+")
_STRIP_RE = re.compile(f"[^{_WORD_CLASS}]+")


@dataclass(frozen=True)
class TokenStream:
    """Ordered tokens with their source spans (offsets into the raw text)."""

    tokens: tuple[str, ...]
    spans: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.tokens) != len(self.spans):
            raise ValueError("tokens and spans must align")

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


def tokenize(text: str) -> TokenStream:
    """Split text on runs of non-word characters.

    A token is a maximal run of Bengali letters/marks/digits, Latin letters,
    or ASCII digits; punctuation and whitespace separate. Total: empty text
    gives an empty stream.
    """
    tokens: list[str] = []
    spans: list[tuple[int, int]] = []
    for m in _TOKEN_RE.finditer(text):
        tokens.append(m.group())
        spans.append((m.start(), m.end()))
    return TokenStream(tuple(tokens), tuple(spans))


def normalize_tokens(stream: TokenStream) -> TokenStream:
    """NFC-normalize each token and strip stray punctuation ("looking!" ->
    "looking"); tokens emptied by normalization are dropped. Idempotent."""
    tokens: list[str] = []
    spans: list[tuple[int, int]] = []
    for token, span in zip(stream.tokens, stream.spans):
        cleaned = _STRIP_RE.sub("", normalize_word(token))
        if cleaned:
            tokens.append(cleaned)
            spans.append(span)
    return TokenStream(tuple(tokens), tuple(spans))


def remove_stop_words(stream: TokenStream, ldd: LexiconDataDictionary) -> TokenStream:
    """Drop tokens whose role is StopWord; every other role (including all
    special lists and polarity words) is retained in order. Idempotent."""
    kept = [
        (token, span)
        for token, span in zip(stream.tokens, stream.spans)
        if lookup_role(token, ldd).kind is not RoleKind.STOP_WORD
    ]
    return TokenStream(tuple(t for t, _ in kept), tuple(s for _, s in kept))


def preprocess(text: str, ldd: LexiconDataDictionary) -> TokenStream:
    """Full pipeline: tokenize, normalize, remove stop words."""
    return remove_stop_words(normalize_tokens(tokenize(text)), ldd)
