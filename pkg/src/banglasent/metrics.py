"""Confusion matrix and weighted precision / recall / F1 evaluation."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Sequence


@dataclass(frozen=True)
class ConfusionMatrix:
    """Square count matrix; rows are gold labels, columns predictions."""

    labels: tuple[str, ...]
    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.counts) != n or any(len(row) != n for row in self.counts):
            raise ValueError("matrix dimensions must equal the label-set size")

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    @property
    def diagonal(self) -> int:
        return sum(self.counts[i][i] for i in range(len(self.labels)))

    def row_sum(self, i: int) -> int:
        return sum(self.counts[i])

    def col_sum(self, j: int) -> int:
        return sum(row[j] for row in self.counts)


def confusion(
    gold: Sequence[str], pred: Sequence[str], labels: Sequence[str]
) -> ConfusionMatrix:
    """counts[g][p] = number of pairs with gold label g and prediction p."""
    if len(gold) != len(pred):
        raise ValueError(f"gold/pred length mismatch: {len(gold)} vs {len(pred)}")
    index = {label: i for i, label in enumerate(labels)}
    if len(index) != len(labels):
        raise ValueError("label set contains duplicates")
    counts = [[0] * len(labels) for _ in labels]
    for g, p in zip(gold, pred):
        if g not in index:
            raise ValueError(f"unknown gold label {g!r}")
        if p not in index:
            raise ValueError(f"unknown predicted label {p!r}")
        counts[index[g]][index[p]] += 1
    return ConfusionMatrix(tuple(labels), tuple(tuple(row) for row in counts))


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    support: int
    degenerate: tuple[str, ...] = ()  # metrics reported as 0 for a 0/0 case


@dataclass
class EvalReport:
    labels: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]
    accuracy: float
    per_class: dict[str, ClassMetrics]
    weighted_precision: float
    weighted_recall: float
    weighted_f1: float
    config: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "matrix": [list(row) for row in self.matrix],
            "accuracy": self.accuracy,
            "per_class": {
                label: {
                    "precision": m.precision,
                    "recall": m.recall,
                    "f1": m.f1,
                    "support": m.support,
                    "degenerate": list(m.degenerate),
                }
                for label, m in self.per_class.items()
            },
            "weighted": {
                "precision": self.weighted_precision,
                "recall": self.weighted_recall,
                "f1": self.weighted_f1,
            },
            "config": self.config,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), ensure_ascii=False, indent=2) + "\n"


def weighted_metrics(matrix: ConfusionMatrix, config: dict | None = None) -> EvalReport:
    """Per-class P/R/F1 plus support-weighted averages and accuracy.

    Zero-division convention: a metric with an empty denominator is 0 and the
    class is flagged; weighted recall is algebraically identical to accuracy.
    """
    total = matrix.total
    if total == 0:
        raise ValueError("empty confusion matrix")

    per_class: dict[str, ClassMetrics] = {}
    w_precision = w_recall = w_f1 = 0.0
    for i, label in enumerate(matrix.labels):
        tp = matrix.counts[i][i]
        support = matrix.row_sum(i)
        col = matrix.col_sum(i)
        degenerate: list[str] = []
        if col == 0:
            precision = 0.0
            degenerate.append("precision")
        else:
            precision = tp / col
        if support == 0:
            recall = 0.0
            degenerate.append("recall")
        else:
            recall = tp / support
        if precision + recall == 0:
            f1 = 0.0
            degenerate.append("f1")
        else:
            f1 = 2 * precision * recall / (precision + recall)
        per_class[label] = ClassMetrics(precision, recall, f1, support, tuple(degenerate))
        w_precision += support * precision
        w_recall += support * recall
        w_f1 += support * f1

    return EvalReport(
        labels=matrix.labels,
        matrix=matrix.counts,
        accuracy=matrix.diagonal / total,
        per_class=per_class,
        weighted_precision=w_precision / total,
        weighted_recall=w_recall / total,
        weighted_f1=w_f1 / total,
        config=dict(config or {}),
    )


def per_class_csv(report: EvalReport) -> str:
    """Companion CSV of per-class rows (plot-ready)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "support", "precision", "recall", "f1"])
    for label in report.labels:
        m = report.per_class[label]
        writer.writerow([label, m.support, repr(m.precision), repr(m.recall), repr(m.f1)])
    return buf.getvalue()


def render_report(report: EvalReport) -> str:
    """Human-readable accuracy and weighted-metric table."""
    lines = [
        f"accuracy           {report.accuracy:.4f}",
        f"weighted precision {report.weighted_precision:.4f}",
        f"weighted recall    {report.weighted_recall:.4f}",
        f"weighted f1        {report.weighted_f1:.4f}",
        "",
        f"{'label':<24} {'support':>7} {'precision':>9} {'recall':>7} {'f1':>7}",
    ]
    for label in report.labels:
        m = report.per_class[label]
        lines.append(
            f"{label:<24} {m.support:>7d} {m.precision:>9.4f} {m.recall:>7.4f} {m.f1:>7.4f}"
        )
    return "\n".join(lines)
