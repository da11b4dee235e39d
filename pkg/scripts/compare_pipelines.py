#!/usr/bin/env python3
"""Two-pipeline comparison experiment on the bundled sample corpus.

Pipeline 1: rule-engine nine-way labels, fine-tuned encoder evaluated on them.
Pipeline 2: binary labels, fine-tuned encoder whose positive-class
probabilities are sliced into the nine categories.

Both packages are driven through their CLIs, so the only coupling is the
labeled-CSV file format. Requires banglasent and banglasent-harness installed.
"""

from __future__ import annotations

import argparse
import subprocess
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def sh(*argv: str) -> None:
    print(f"$ {' '.join(argv)}")
    subprocess.run(argv, check=True)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out/comparison")
    parser.add_argument("--trials", default="2")
    parser.add_argument("--epochs", default="3")
    parser.add_argument("--seed", default="42")
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    primary = (sys.executable, "-m", "banglasent.cli")
    harness = (sys.executable, "-m", "banglasent_harness.cli")
    corpus = str(REPO / "data" / "sample_corpus.csv")

    export9 = str(out / "export_nine.csv")
    export2 = str(out / "export_binary.csv")
    sh(*primary, "export", "--input", corpus, "--output", export9, "--label-column", "category")
    sh(*primary, "export", "--input", corpus, "--output", export2, "--label-column", "binary_pred")

    for export, prep in ((export9, "prep_nine"), (export2, "prep_binary")):
        sh(
            *harness, "prepare",
            "--input", export,
            "--out-dir", str(out / prep),
            "--seed", args.seed,
        )
    for prep, run, seed in (
        ("prep_nine", "run_nine", args.seed),
        ("prep_binary", "run_binary", str(int(args.seed) + 1)),
    ):
        sh(
            *harness, "finetune",
            "--data", str(out / prep),
            "--out-dir", str(out / run),
            "--trials", args.trials,
            "--epochs", args.epochs,
            "--seed", seed,
        )
    sh(
        *harness, "evaluate",
        "--nine-data", str(out / "prep_nine"),
        "--nine-model", str(out / "run_nine"),
        "--binary-data", str(out / "prep_binary"),
        "--binary-model", str(out / "run_binary"),
        "--out", str(out / "comparison.json"),
    )
    print(f"\nartifacts in {out}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
