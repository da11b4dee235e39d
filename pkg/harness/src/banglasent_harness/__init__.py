"""Fine-tuning harness: encode labeled review CSVs, sweep a small transformer
encoder over the (learning rate, batch size) grid, and compare nine-way
classification against binary classification with probability slicing."""

__version__ = "0.1.0"

from .config import BATCH_SIZES, LR_MAX, LR_MIN, TrainConfig, sample_trials
from .data_prep import (
    NINE_LABELS,
    PreparedData,
    PreparedSplit,
    load_prepared,
    prepare,
    save_prepared,
)
from .evaluation import evaluate_pipelines, weighted_report
from .modeling import build_model, load_checkpoint, save_checkpoint
from .slicing import classify_binary_to_nine, slice_probability
from .sweep import TrialResult, evaluate_accuracy, run_sweep, train_single_trial

__all__ = [
    "BATCH_SIZES",
    "LR_MAX",
    "LR_MIN",
    "NINE_LABELS",
    "PreparedData",
    "PreparedSplit",
    "TrainConfig",
    "TrialResult",
    "build_model",
    "classify_binary_to_nine",
    "evaluate_accuracy",
    "evaluate_pipelines",
    "load_checkpoint",
    "load_prepared",
    "prepare",
    "run_sweep",
    "sample_trials",
    "save_checkpoint",
    "save_prepared",
    "slice_probability",
    "train_single_trial",
    "weighted_report",
]
