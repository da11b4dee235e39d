#!/usr/bin/env python3
"""End-to-end run of the scoring pipeline on the bundled sample corpus:
validate the starter lexicon, score and categorize every review, then
evaluate the binary predictions against the gold labels."""

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
    parser.add_argument("--out-dir", default="out/sample", help="output directory")
    parser.add_argument("--workers", default="2")
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    cli = (sys.executable, "-m", "banglasent.cli")
    lexicon = str(REPO / "src" / "banglasent" / "data" / "starter_lexicon.json")
    corpus = str(REPO / "data" / "sample_corpus.csv")
    labeled = str(out / "labeled.csv")

    sh(*cli, "validate-lexicon", lexicon)
    sh(
        *cli, "run",
        "--input", corpus,
        "--output", labeled,
        "--lexicon", lexicon,
        "--workers", args.workers,
        "--emit-plot-data",
    )
    sh(
        *cli, "eval",
        "--input", labeled,
        "--output", str(out / "report.json"),
        "--emit-plot-data",
    )
    print(f"\nartifacts in {out}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
