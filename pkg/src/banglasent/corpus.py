"""Dataset ingestion (null/duplicate cleaning), deterministic splitting, and
the labeled-CSV file boundary consumed by the fine-tuning harness."""

from __future__ import annotations

import csv
import random
import unicodedata
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .classify import BINARY_NEGATIVE, BINARY_POSITIVE, SentimentCategory

INPUT_COLUMNS = ("id", "text", "label")
LABELED_COLUMNS = (
    "id",
    "text",
    "gold_label",
    "raw_score",
    "normalized_score",
    "category",
    "binary_pred",
)
_VALID_LABELS = {BINARY_POSITIVE, BINARY_NEGATIVE}


class CorpusFormatError(ValueError):
    """Malformed dataset file."""


@dataclass(frozen=True)
class Review:
    id: str
    text: str
    gold_label: str | None = None


@dataclass(frozen=True)
class ScoredReview:
    id: str
    text: str
    gold_label: str | None
    raw_score: float
    normalized_score: float
    category: SentimentCategory
    binary_pred: str


@dataclass
class LoadReport:
    rows_read: int = 0
    dropped_null: int = 0
    dropped_duplicate: int = 0
    warnings: list[str] = field(default_factory=list)


def load_dataset(path: str | Path) -> tuple[list[Review], LoadReport]:
    """Read an id,text,label CSV; drop null-text rows and exact duplicates.

    Text is NFC-normalized; a duplicate is an exact normalized-text match and
    the first occurrence wins. Drop counts are surfaced in the load report.
    """
    path = Path(path)
    report = LoadReport()
    reviews: list[Review] = []
    seen_texts: set[str] = set()
    seen_ids: set[str] = set()

    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise CorpusFormatError(f"{path}: empty file, expected header {INPUT_COLUMNS}")
        missing = [c for c in INPUT_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise CorpusFormatError(f"{path}: missing required column(s) {missing}")
        for lineno, row in enumerate(reader, start=2):
            report.rows_read += 1
            if any(row.get(c) is None for c in INPUT_COLUMNS):
                raise CorpusFormatError(f"{path}:{lineno}: malformed row {row!r}")
            text = unicodedata.normalize("NFC", row["text"]).strip()
            if not text:
                report.dropped_null += 1
                continue
            if text in seen_texts:
                report.dropped_duplicate += 1
                continue
            label = row["label"].strip() or None
            if label is not None and label not in _VALID_LABELS:
                raise CorpusFormatError(
                    f"{path}:{lineno}: label {label!r} not in {sorted(_VALID_LABELS)}"
                )
            rid = row["id"].strip()
            if rid in seen_ids:
                raise CorpusFormatError(f"{path}:{lineno}: duplicate id {rid!r}")
            seen_ids.add(rid)
            seen_texts.add(text)
            reviews.append(Review(id=rid, text=text, gold_label=label))
    return reviews, report


def split_dataset(
    reviews: Sequence[Review], train_fraction: float, seed: int
) -> tuple[list[Review], list[Review]]:
    """Seeded shuffle then partition; train size is round(fraction * n).

    The two sides are disjoint and their union is the input. An empty side is
    a warning, not an error.
    """
    if not 0 < train_fraction < 1:
        raise ValueError("train_fraction must lie strictly between 0 and 1")
    order = list(reviews)
    random.Random(seed).shuffle(order)
    n_train = round(train_fraction * len(order))
    train, test = order[:n_train], order[n_train:]
    if reviews and (not train or not test):
        warnings.warn(f"degenerate split: {len(train)} train / {len(test)} test", stacklevel=2)
    return train, test


def write_labeled(path: str | Path, scored: Sequence[ScoredReview]) -> None:
    """Write the scored-review CSV (UTF-8, header, input order preserved).

    Floats are serialized with repr so a read-back is bit-exact.
    """
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(LABELED_COLUMNS)
        for s in scored:
            writer.writerow(
                [
                    s.id,
                    s.text,
                    s.gold_label or "",
                    repr(s.raw_score),
                    repr(s.normalized_score),
                    s.category.label,
                    s.binary_pred,
                ]
            )


def read_labeled(path: str | Path) -> list[ScoredReview]:
    """Read back a labeled CSV written by write_labeled."""
    path = Path(path)
    out: list[ScoredReview] = []
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise CorpusFormatError(f"{path}: empty file")
        missing = [c for c in LABELED_COLUMNS if c not in reader.fieldnames]
        if missing:
            raise CorpusFormatError(f"{path}: missing required column(s) {missing}")
        for lineno, row in enumerate(reader, start=2):
            try:
                out.append(
                    ScoredReview(
                        id=row["id"],
                        text=row["text"],
                        gold_label=row["gold_label"] or None,
                        raw_score=float(row["raw_score"]),
                        normalized_score=float(row["normalized_score"]),
                        category=SentimentCategory.from_label(row["category"]),
                        binary_pred=row["binary_pred"],
                    )
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise CorpusFormatError(f"{path}:{lineno}: {exc}") from exc
    return out
