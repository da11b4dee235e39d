"""Training configuration and the sweep sampling grid."""

from __future__ import annotations

import random
from dataclasses import dataclass

LR_MIN = 1e-5
LR_MAX = 1e-3
BATCH_SIZES = (8, 16, 32)


@dataclass(frozen=True)
class TrainConfig:
    """Sweep settings. learning_rate/batch_size of None are sampled per trial
    from the grid; fixed values must lie inside it."""

    learning_rate: float | None = None
    batch_size: int | None = None
    epochs: int = 3
    trial_count: int = 10
    seed: int = 42
    model: str = "tiny-random"
    max_seq_len: int = 48

    def __post_init__(self) -> None:
        if self.learning_rate is not None and not (LR_MIN <= self.learning_rate <= LR_MAX):
            raise ValueError(
                f"learning_rate {self.learning_rate} outside grid [{LR_MIN}, {LR_MAX}]"
            )
        if self.batch_size is not None and self.batch_size not in BATCH_SIZES:
            raise ValueError(f"batch_size {self.batch_size} not in {BATCH_SIZES}")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.trial_count < 1:
            raise ValueError("trial_count must be >= 1")
        if self.max_seq_len < 4:
            raise ValueError("max_seq_len must be >= 4")


def sample_trials(config: TrainConfig) -> list[tuple[float, int]]:
    """Deterministic (learning_rate, batch_size) draws for the sweep: log-uniform
    learning rate over the grid range, uniform batch size."""
    rng = random.Random(config.seed)
    trials = []
    for _ in range(config.trial_count):
        lr = (
            config.learning_rate
            if config.learning_rate is not None
            else 10 ** rng.uniform(-5, -3)
        )
        batch = (
            config.batch_size if config.batch_size is not None else rng.choice(BATCH_SIZES)
        )
        trials.append((lr, batch))
    return trials
