"""Normalization of raw scores, nine-way categorization, binary collapse."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

#: A normalized score this close to zero is Neutral.
NEUTRAL_EPS = 1e-9
#: Absolute snap applied at bin edges so ratios that differ by float rounding
#: land in the same bin.
EDGE_EPS = 1e-12

BINARY_POSITIVE = "positive"
BINARY_NEGATIVE = "negative"


class SentimentCategory(enum.IntEnum):
    """Nine sentiment grades, ordered most negative -> most positive."""

    EXTREMELY_NEGATIVE = -4
    CONSIDERABLY_NEGATIVE = -3
    NEGATIVE = -2
    SLIGHTLY_NEGATIVE = -1
    NEUTRAL = 0
    SLIGHTLY_POSITIVE = 1
    POSITIVE = 2
    CONSIDERABLY_POSITIVE = 3
    EXTREMELY_POSITIVE = 4

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> "SentimentCategory":
        try:
            return _BY_LABEL[label]
        except KeyError:
            raise ValueError(f"unknown sentiment category label: {label!r}") from None


_LABELS = {
    SentimentCategory.EXTREMELY_POSITIVE: "Extremely Positive",
    SentimentCategory.CONSIDERABLY_POSITIVE: "Considerably Positive",
    SentimentCategory.POSITIVE: "Positive",
    SentimentCategory.SLIGHTLY_POSITIVE: "Slightly Positive",
    SentimentCategory.NEUTRAL: "Neutral",
    SentimentCategory.SLIGHTLY_NEGATIVE: "Slightly Negative",
    SentimentCategory.NEGATIVE: "Negative",
    SentimentCategory.CONSIDERABLY_NEGATIVE: "Considerably Negative",
    SentimentCategory.EXTREMELY_NEGATIVE: "Extremely Negative",
}
_BY_LABEL = {label: cat for cat, label in _LABELS.items()}

#: Canonical display/report order: most positive first.
ORDERED_CATEGORIES = tuple(sorted(SentimentCategory, key=lambda c: -c.value))
CATEGORY_LABELS = tuple(c.label for c in ORDERED_CATEGORIES)


@dataclass(frozen=True)
class BinConfig:
    """Upper edges of the four positive intensity bins; negatives mirror them.

    Defaults are equal-width quartiles. The last edge must be 1 so the most
    intense bin closes the normalized range.
    """

    positive_edges: tuple[float, float, float, float] = (0.25, 0.5, 0.75, 1.0)

    def __post_init__(self) -> None:
        edges = self.positive_edges
        if len(edges) != 4:
            raise ValueError("exactly four positive edges required")
        if any(not (0 < e <= 1) for e in edges):
            raise ValueError("edges must lie in (0, 1]")
        if any(a >= b for a, b in zip(edges, edges[1:])):
            raise ValueError("edges must be strictly ascending")
        if edges[-1] != 1.0:
            raise ValueError("last positive edge must be 1")

    @property
    def negative_edges(self) -> tuple[float, float, float, float]:
        return tuple(-e for e in reversed(self.positive_edges))  # type: ignore[return-value]

    def as_dict(self) -> dict:
        return {"positive_edges": list(self.positive_edges)}


@dataclass(frozen=True)
class NormalizationScale:
    """Per-sign max scale fitted on a calibration batch."""

    max_positive: float = 0.0
    max_negative_magnitude: float = 0.0

    def __post_init__(self) -> None:
        if self.max_positive < 0 or self.max_negative_magnitude < 0:
            raise ValueError("scale components must be non-negative")

    def as_dict(self) -> dict[str, float]:
        return {
            "max_positive": self.max_positive,
            "max_negative_magnitude": self.max_negative_magnitude,
        }


def fit_scale(raw_scores: Iterable[float]) -> NormalizationScale:
    """max of positive scores and max magnitude of negative scores (0 if none)."""
    max_pos = 0.0
    max_neg = 0.0
    for s in raw_scores:
        if s > 0 and s > max_pos:
            max_pos = s
        elif s < 0 and -s > max_neg:
            max_neg = -s
    return NormalizationScale(max_pos, max_neg)


def normalize(raw: float, scale: NormalizationScale) -> float:
    """Map a raw score into [-1, 1], preserving sign and the zero point.

    Positive scores divide by max_positive, negative by max_negative_magnitude,
    each clamped to +/-1; a zero scale maps any nonzero raw to the clamp.
    """
    if raw > 0:
        if scale.max_positive == 0:
            return 1.0
        return min(raw / scale.max_positive, 1.0)
    if raw < 0:
        if scale.max_negative_magnitude == 0:
            return -1.0
        return max(raw / scale.max_negative_magnitude, -1.0)
    return 0.0


def categorize(normalized: float, bins: BinConfig = BinConfig()) -> SentimentCategory:
    """Bin a normalized score into one of the nine categories.

    Exactly-zero (within NEUTRAL_EPS) is Neutral; otherwise the magnitude
    selects an intensity grade on the sign's side. Input must lie in [-1, 1].
    """
    if abs(normalized) <= NEUTRAL_EPS:
        return SentimentCategory.NEUTRAL
    magnitude = abs(normalized)
    if magnitude > 1.0 + EDGE_EPS:
        raise ValueError(f"normalized score {normalized} outside [-1, 1]")
    rank = 4
    for idx, edge in enumerate(bins.positive_edges):
        if magnitude <= edge + EDGE_EPS:
            rank = idx + 1
            break
    return SentimentCategory(rank if normalized > 0 else -rank)


def collapse_binary(raw: float) -> str:
    """Sign of the raw score; exact zero breaks toward the majority class."""
    return BINARY_NEGATIVE if raw < 0 else BINARY_POSITIVE


def save_scale(scale: NormalizationScale, path: str | Path) -> None:
    Path(path).write_text(json.dumps(scale.as_dict(), indent=2) + "\n", encoding="utf-8")


def load_scale(path: str | Path) -> NormalizationScale:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return NormalizationScale(
        max_positive=float(doc["max_positive"]),
        max_negative_magnitude=float(doc["max_negative_magnitude"]),
    )
