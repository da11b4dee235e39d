"""Weighted-metric evaluation and the two-pipeline comparison report.

The report JSON mirrors the scoring pipeline's metrics schema
({labels, matrix, accuracy, per_class, weighted, config}) so reports from
both packages are directly comparable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

COMPARISON_NOTE = (
    "Desk-scale comparison on the bundled sample export; numbers are not "
    "comparable to full-scale benchmarks because the full-size review corpus "
    "this pipeline targets is not distributed with this repository."
)


def confusion_matrix(
    gold: Sequence[str], pred: Sequence[str], labels: Sequence[str]
) -> list[list[int]]:
    if len(gold) != len(pred):
        raise ValueError(f"gold/pred length mismatch: {len(gold)} vs {len(pred)}")
    index = {label: i for i, label in enumerate(labels)}
    counts = [[0] * len(labels) for _ in labels]
    for g, p in zip(gold, pred):
        counts[index[g]][index[p]] += 1
    return counts


@dataclass
class EvalReport:
    labels: list[str]
    matrix: list[list[int]]
    accuracy: float
    per_class: dict[str, dict]
    weighted: dict[str, float]
    config: dict

    def to_json_dict(self) -> dict:
        return {
            "labels": self.labels,
            "matrix": self.matrix,
            "accuracy": self.accuracy,
            "per_class": self.per_class,
            "weighted": self.weighted,
            "config": self.config,
        }


def weighted_report(
    gold: Sequence[str],
    pred: Sequence[str],
    labels: Sequence[str],
    config: dict | None = None,
) -> EvalReport:
    matrix = confusion_matrix(gold, pred, labels)
    total = sum(sum(row) for row in matrix)
    if total == 0:
        raise ValueError("no evaluation pairs")
    per_class: dict[str, dict] = {}
    w_precision = w_recall = w_f1 = 0.0
    diagonal = 0
    for i, label in enumerate(labels):
        tp = matrix[i][i]
        diagonal += tp
        support = sum(matrix[i])
        col = sum(row[i] for row in matrix)
        precision = tp / col if col else 0.0
        recall = tp / support if support else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        per_class[label] = {
            "precision": precision,
            "recall": recall,
            "f1": f1,
            "support": support,
        }
        w_precision += support * precision
        w_recall += support * recall
        w_f1 += support * f1
    return EvalReport(
        labels=list(labels),
        matrix=matrix,
        accuracy=diagonal / total,
        per_class=per_class,
        weighted={
            "precision": w_precision / total,
            "recall": w_recall / total,
            "f1": w_f1 / total,
        },
        config=dict(config or {}),
    )


def evaluate_pipelines(
    pipeline1_pred: Sequence[str],
    pipeline2_pred: Sequence[str],
    gold: Sequence[str],
    labels: Sequence[str],
    config1: dict | None = None,
    config2: dict | None = None,
) -> dict:
    """Two EvalReports over the same gold labels plus a side-by-side table."""
    if not (len(pipeline1_pred) == len(pipeline2_pred) == len(gold)):
        raise ValueError(
            "misaligned prediction/gold lengths: "
            f"{len(pipeline1_pred)} / {len(pipeline2_pred)} / {len(gold)}"
        )
    report1 = weighted_report(gold, pipeline1_pred, labels, config1)
    report2 = weighted_report(gold, pipeline2_pred, labels, config2)
    return {
        "note": COMPARISON_NOTE,
        "pipeline1": report1.to_json_dict(),
        "pipeline2": report2.to_json_dict(),
        "delta": {
            "accuracy": report1.accuracy - report2.accuracy,
            "precision": report1.weighted["precision"] - report2.weighted["precision"],
            "recall": report1.weighted["recall"] - report2.weighted["recall"],
            "f1": report1.weighted["f1"] - report2.weighted["f1"],
        },
    }


def render_comparison(report: dict) -> str:
    p1, p2 = report["pipeline1"], report["pipeline2"]
    rows = [
        ("accuracy", p1["accuracy"], p2["accuracy"]),
        ("weighted precision", p1["weighted"]["precision"], p2["weighted"]["precision"]),
        ("weighted recall", p1["weighted"]["recall"], p2["weighted"]["recall"]),
        ("weighted f1", p1["weighted"]["f1"], p2["weighted"]["f1"]),
    ]
    lines = [f"{'metric':<20} {'pipeline1':>9} {'pipeline2':>9}"]
    for name, a, b in rows:
        lines.append(f"{name:<20} {a:>9.4f} {b:>9.4f}")
    return "\n".join(lines)


def dump_comparison(report: dict, path) -> None:
    from pathlib import Path

    Path(path).write_text(
        json.dumps(report, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
