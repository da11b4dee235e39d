"""Hyperparameter sweep: seeded trials over the (learning rate, batch size)
grid, each fine-tuning for a fixed number of epochs; the best trial by test
accuracy is retained. A trial whose loss goes non-finite is aborted and
logged as diverged without stopping the sweep."""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import torch

from .config import TrainConfig, sample_trials
from .data_prep import PreparedData, PreparedSplit
from .modeling import build_model, save_checkpoint


@dataclass
class TrialResult:
    trial: int
    learning_rate: float
    batch_size: int
    epochs: int
    status: str  # "ok" | "diverged"
    epoch_mean_losses: list[float] = field(default_factory=list)
    first_epoch_step_losses: list[float] = field(default_factory=list)
    test_accuracy: float | None = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "trial": self.trial,
                "learning_rate": self.learning_rate,
                "batch_size": self.batch_size,
                "epochs": self.epochs,
                "status": self.status,
                "epoch_mean_losses": self.epoch_mean_losses,
                "first_epoch_step_losses": self.first_epoch_step_losses,
                "test_accuracy": self.test_accuracy,
            }
        )


def _batches(n: int, batch_size: int, rng: random.Random | None):
    order = list(range(n))
    if rng is not None:
        rng.shuffle(order)
    for start in range(0, n, batch_size):
        yield order[start : start + batch_size]


def _tensors(split: PreparedSplit, idx: list[int]):
    rows = np.asarray(idx)
    return (
        torch.from_numpy(split.input_ids[rows]),
        torch.from_numpy(split.attention_mask[rows]),
        torch.from_numpy(split.labels[rows]),
    )


@torch.no_grad()
def evaluate_accuracy(model, split: PreparedSplit, batch_size: int = 32) -> float:
    model.eval()
    correct = 0
    for idx in _batches(len(split.labels), batch_size, rng=None):
        ids, mask, labels = _tensors(split, idx)
        logits = model(input_ids=ids, attention_mask=mask).logits
        correct += int((logits.argmax(dim=-1) == labels).sum())
    return correct / len(split.labels)


@torch.no_grad()
def predict_logits(model, split: PreparedSplit, batch_size: int = 32) -> np.ndarray:
    model.eval()
    outputs = []
    for idx in _batches(len(split.labels), batch_size, rng=None):
        ids, mask, _ = _tensors(split, idx)
        outputs.append(model(input_ids=ids, attention_mask=mask).logits.numpy())
    return np.concatenate(outputs, axis=0)


def train_single_trial(
    data: PreparedData,
    learning_rate: float,
    batch_size: int,
    epochs: int,
    seed: int,
    model_id: str = "tiny-random",
    trial: int = 0,
) -> tuple[TrialResult, torch.nn.Module]:
    """Fine-tune one configuration; returns the trial log and the model."""
    torch.manual_seed(seed)
    model = build_model(model_id, len(data.vocab), data.num_labels, data.max_seq_len)
    optimizer = torch.optim.AdamW(model.parameters(), lr=learning_rate)
    steps_per_epoch = math.ceil(len(data.train.labels) / batch_size)
    total_steps = max(1, steps_per_epoch * epochs)
    # linear decay to zero over the run
    scheduler = torch.optim.lr_scheduler.LambdaLR(
        optimizer, lambda step: max(0.0, 1.0 - step / total_steps)
    )

    result = TrialResult(trial, learning_rate, batch_size, epochs, status="ok")
    model.train()
    for epoch in range(epochs):
        rng = random.Random(seed * 1009 + epoch)
        epoch_losses = []
        for idx in _batches(len(data.train.labels), batch_size, rng):
            ids, mask, labels = _tensors(data.train, idx)
            optimizer.zero_grad()
            out = model(input_ids=ids, attention_mask=mask, labels=labels)
            loss_value = float(out.loss.detach())
            if not math.isfinite(loss_value):
                result.status = "diverged"
                return result, model
            out.loss.backward()
            optimizer.step()
            scheduler.step()
            epoch_losses.append(loss_value)
            if epoch == 0:
                result.first_epoch_step_losses.append(loss_value)
        result.epoch_mean_losses.append(sum(epoch_losses) / len(epoch_losses))
    result.test_accuracy = evaluate_accuracy(model, data.test)
    return result, model


def run_sweep(
    data: PreparedData, config: TrainConfig, out_dir: str | Path
) -> tuple[list[TrialResult], int]:
    """Run the sweep, write sweep.jsonl (one trial per line), save the best
    checkpoint, and return (results, best_trial_index)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    results: list[TrialResult] = []
    best_index = -1
    best_accuracy = -1.0

    with (out / "sweep.jsonl").open("w", encoding="utf-8") as log:
        for trial, (lr, batch) in enumerate(sample_trials(config)):
            result, model = train_single_trial(
                data,
                learning_rate=lr,
                batch_size=batch,
                epochs=config.epochs,
                seed=config.seed * 1000 + trial,
                model_id=config.model,
                trial=trial,
            )
            results.append(result)
            log.write(result.to_json() + "\n")
            if result.status == "ok" and result.test_accuracy > best_accuracy:
                best_accuracy = result.test_accuracy
                best_index = trial
                save_checkpoint(model, out / "checkpoint")

    if best_index < 0:
        raise RuntimeError("every trial diverged; no checkpoint retained")
    summary = {
        "best_trial": best_index,
        "learning_rate": results[best_index].learning_rate,
        "batch_size": results[best_index].batch_size,
        "epochs": config.epochs,
        "test_accuracy": best_accuracy,
        "trials": len(results),
        "seed": config.seed,
        "model": config.model,
    }
    (out / "sweep_summary.json").write_text(
        json.dumps(summary, indent=2) + "\n", encoding="utf-8"
    )
    return results, best_index
