"""Harness CLI: prepare | finetune | evaluate.

prepare   labeled CSV -> padded/masked/label-encoded train+test tensors
finetune  seeded sweep over the (lr, batch) grid, best checkpoint retained
evaluate  nine-way model vs binary model with probability slicing, compared
          on the same gold labels with weighted metrics
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .config import TrainConfig
from .data_prep import NINE_LABELS, load_prepared, prepare, save_prepared
from .evaluation import dump_comparison, evaluate_pipelines, render_comparison
from .slicing import classify_binary_to_nine

# torch/transformers are imported lazily inside the commands that train or
# run inference, so `prepare` stays light.


def cmd_prepare(args: argparse.Namespace) -> int:
    data = prepare(
        args.input,
        label_column=args.label_column,
        train_fraction=args.train_fraction,
        seed=args.seed,
        max_seq_len=args.max_len,
    )
    save_prepared(data, args.out_dir)
    print(
        f"prepared {data.meta['train_rows']} train / {data.meta['test_rows']} test rows, "
        f"{data.num_labels} labels, vocab {len(data.vocab)} -> {args.out_dir}"
    )
    return 0


def cmd_finetune(args: argparse.Namespace) -> int:
    from .sweep import run_sweep

    data = load_prepared(args.data)
    config = TrainConfig(
        learning_rate=args.lr,
        batch_size=args.batch,
        epochs=args.epochs,
        trial_count=args.trials,
        seed=args.seed,
        model=args.model,
        max_seq_len=data.max_seq_len,
    )
    results, best = run_sweep(data, config, args.out_dir)
    ok = [r for r in results if r.status == "ok"]
    print(
        f"sweep complete: {len(results)} trials ({len(results) - len(ok)} diverged); "
        f"best trial {best} "
        f"(lr {results[best].learning_rate:.2e}, batch {results[best].batch_size}) "
        f"test accuracy {results[best].test_accuracy:.4f} -> {args.out_dir}"
    )
    return 0


def _decode(labels: np.ndarray, label_map: list[str]) -> list[str]:
    return [label_map[int(i)] for i in labels]


def cmd_evaluate(args: argparse.Namespace) -> int:
    from .modeling import load_checkpoint
    from .sweep import predict_logits

    nine = load_prepared(args.nine_data)
    if not set(nine.label_map) <= set(NINE_LABELS):
        raise ValueError(
            f"{args.nine_data}: expected nine-way category labels, got {nine.label_map}"
        )
    binary = load_prepared(args.binary_data)
    if set(binary.label_map) != {"positive", "negative"}:
        raise ValueError(
            f"{args.binary_data}: expected binary labels, got {binary.label_map}"
        )
    if list(nine.test.ids) != list(binary.test.ids):
        raise ValueError("nine-way and binary test splits are not aligned by id")

    nine_model = load_checkpoint(Path(args.nine_model) / "checkpoint")
    p1_logits = predict_logits(nine_model, nine.test)
    pipeline1 = [nine.label_map[i] for i in p1_logits.argmax(axis=1)]

    binary_model = load_checkpoint(Path(args.binary_model) / "checkpoint")
    p2_logits = predict_logits(binary_model, binary.test)
    shifted = np.exp(p2_logits - p2_logits.max(axis=1, keepdims=True))
    probabilities = shifted / shifted.sum(axis=1, keepdims=True)
    positive_index = binary.label_map.index("positive")
    pipeline2 = classify_binary_to_nine(probabilities[:, positive_index].tolist())

    gold = _decode(nine.test.labels, nine.label_map)

    def sweep_config(model_dir: str) -> dict:
        path = Path(model_dir) / "sweep_summary.json"
        return json.loads(path.read_text(encoding="utf-8")) if path.exists() else {}

    report = evaluate_pipelines(
        pipeline1,
        pipeline2,
        gold,
        labels=list(NINE_LABELS),
        config1=sweep_config(args.nine_model),
        config2=sweep_config(args.binary_model),
    )
    print(report["note"])
    print(render_comparison(report))
    if args.out:
        dump_comparison(report, args.out)
        print(f"comparison report -> {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="banglasent-harness", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_prep = sub.add_parser("prepare", help="encode a labeled CSV into train/test tensors")
    p_prep.add_argument("--input", required=True)
    p_prep.add_argument("--label-column", default="label")
    p_prep.add_argument("--out-dir", required=True)
    p_prep.add_argument("--seed", type=int, default=42)
    p_prep.add_argument("--max-len", type=int, default=48)
    p_prep.add_argument("--train-fraction", type=float, default=0.8)
    p_prep.set_defaults(func=cmd_prepare)

    p_fit = sub.add_parser("finetune", help="run the hyperparameter sweep")
    p_fit.add_argument("--data", required=True, help="prepared data directory")
    p_fit.add_argument("--out-dir", required=True)
    p_fit.add_argument("--trials", type=int, default=10)
    p_fit.add_argument("--seed", type=int, default=42)
    p_fit.add_argument("--epochs", type=int, default=3)
    p_fit.add_argument("--lr", type=float, default=None, help="fix the learning rate")
    p_fit.add_argument("--batch", type=int, default=None, help="fix the batch size")
    p_fit.add_argument("--model", default="tiny-random")
    p_fit.set_defaults(func=cmd_finetune)

    p_eval = sub.add_parser("evaluate", help="compare the two pipelines on shared gold labels")
    p_eval.add_argument("--nine-data", required=True)
    p_eval.add_argument("--nine-model", required=True)
    p_eval.add_argument("--binary-data", required=True)
    p_eval.add_argument("--binary-model", required=True)
    p_eval.add_argument("--out", default=None)
    p_eval.set_defaults(func=cmd_evaluate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
