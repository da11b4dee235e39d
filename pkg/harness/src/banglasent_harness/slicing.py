"""Map binary positive-class probabilities onto the nine sentiment grades.

Equal-width slices over [0.5, 1] mirrored below 0.5; exactly 0.5 is Neutral.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .data_prep import NINE_LABELS

#: Upper edges of the four positive probability slices.
DEFAULT_SLICE_EDGES = (0.625, 0.75, 0.875, 1.0)

_POSITIVE_ORDER = (
    "Slightly Positive",
    "Positive",
    "Considerably Positive",
    "Extremely Positive",
)
_NEGATIVE_ORDER = (
    "Slightly Negative",
    "Negative",
    "Considerably Negative",
    "Extremely Negative",
)
_EDGE_EPS = 1e-12


def slice_probability(
    p: float, edges: Sequence[float] = DEFAULT_SLICE_EDGES
) -> str:
    """One probability -> one of the nine category labels."""
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"probability {p} outside [0, 1]")
    if len(edges) != 4 or edges[-1] != 1.0 or any(
        a >= b for a, b in zip(edges, edges[1:])
    ):
        raise ValueError("slice edges must be four ascending values ending at 1")
    if p == 0.5:
        return "Neutral"
    # distance from the neutral point, rescaled onto the positive edge scale
    magnitude = 0.5 + abs(p - 0.5)
    names = _POSITIVE_ORDER if p > 0.5 else _NEGATIVE_ORDER
    for name, edge in zip(names, edges):
        if magnitude <= edge + _EDGE_EPS:
            return name
    return names[-1]


def classify_binary_to_nine(
    probabilities: Iterable[float], edges: Sequence[float] = DEFAULT_SLICE_EDGES
) -> list[str]:
    """Positive-class probabilities -> nine-way labels (monotone in p)."""
    return [slice_probability(p, edges) for p in probabilities]


def category_rank(label: str) -> int:
    """Most positive = highest rank; total order over the nine labels."""
    return len(NINE_LABELS) - 1 - NINE_LABELS.index(label)
