"""Command-line pipeline: score | run | eval | validate-lexicon | export.

Exit codes: 0 success, 1 validation/contract failure, 2 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import hashlib
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path

from . import __version__
from .classify import (
    BinConfig,
    NormalizationScale,
    SentimentCategory,
    categorize,
    collapse_binary,
    fit_scale,
    load_scale,
    normalize,
    save_scale,
)
from .corpus import (
    CorpusFormatError,
    Review,
    ScoredReview,
    load_dataset,
    write_labeled,
)
from .engine import RuleConfig, render_trace, score_review
from .lexicon import (
    LexiconDataDictionary,
    LexiconError,
    bundled_lexicon_path,
    load_ldd,
    load_ldd_with_warnings,
)
from .metrics import confusion, per_class_csv, render_report, weighted_metrics

BINARY_LABEL_ORDER = ("positive", "negative")
EXPORT_LABEL_COLUMNS = ("category", "binary_pred", "gold_label")


class UsageError(ValueError):
    """Bad flags or arguments; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep exit codes stable: usage errors are contract failures
        raise UsageError(message)


def _utcnow() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _parse_bins(spec: str | None) -> BinConfig:
    if spec is None:
        return BinConfig()
    try:
        edges = tuple(float(part) for part in spec.split(","))
    except ValueError:
        raise UsageError(f"--bins expects comma-separated numbers, got {spec!r}") from None
    return BinConfig(positive_edges=edges)  # type: ignore[arg-type]


def _load_rule_config(path: str | None) -> RuleConfig:
    if path is None:
        return RuleConfig()
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(doc, dict):
        raise UsageError(f"--config {path}: expected a JSON object of rule constants")
    try:
        return RuleConfig(**doc)
    except TypeError as exc:
        raise UsageError(f"--config {path}: {exc}") from exc


def _score_text(text: str, ldd: LexiconDataDictionary, config: RuleConfig) -> float:
    return score_review(text, ldd, config)[0]


def _score_batch(
    texts: list[str], ldd: LexiconDataDictionary, config: RuleConfig, workers: int
) -> list[float]:
    # Output order always matches input order, whatever the worker count.
    if workers <= 1 or len(texts) < 2:
        return [_score_text(t, ldd, config) for t in texts]
    fn = partial(_score_text, ldd=ldd, config=config)
    chunk = max(1, len(texts) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, texts, chunksize=chunk))


def _score_reviews(
    reviews: list[Review],
    ldd: LexiconDataDictionary,
    rule_config: RuleConfig,
    bins: BinConfig,
    workers: int,
    scale: NormalizationScale | None,
) -> tuple[list[ScoredReview], NormalizationScale]:
    raw_scores = _score_batch([r.text for r in reviews], ldd, rule_config, workers)
    if scale is None:
        scale = fit_scale(raw_scores)
    scored = []
    for review, raw in zip(reviews, raw_scores):
        norm = normalize(raw, scale)
        scored.append(
            ScoredReview(
                id=review.id,
                text=review.text,
                gold_label=review.gold_label,
                raw_score=raw,
                normalized_score=norm,
                category=categorize(norm, bins),
                binary_pred=collapse_binary(raw),
            )
        )
    return scored, scale


def _write_manifest(
    path: Path,
    command: str,
    args: argparse.Namespace,
    rule_config: RuleConfig,
    bins: BinConfig,
    scale: NormalizationScale,
    scale_source: str,
    inputs: dict[str, str],
    outputs: dict[str, str],
    started: str,
) -> None:
    manifest = {
        "tool": "banglasent",
        "version": __version__,
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "rule_config": rule_config.as_dict(),
        "bins": bins.as_dict(),
        "scale": {"source": scale_source, **scale.as_dict()},
        "seed": args.seed,
        "workers": args.workers,
        "started_at": started,
        "finished_at": _utcnow(),
    }
    path.write_text(json.dumps(manifest, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")


def cmd_score(args: argparse.Namespace) -> int:
    ldd = load_ldd(args.lexicon)
    rule_config = _load_rule_config(args.config)
    bins = _parse_bins(args.bins)
    score, trace = score_review(args.text, ldd, rule_config)
    if args.trace:
        print(render_trace(trace))
    print(f"raw score: {score:.10g}")
    if args.scale:
        scale = load_scale(args.scale)
        norm = normalize(score, scale)
        category = categorize(norm, bins)
        print(f"normalized score: {norm:.10g}")
        print(f"category: {category.label}")
    return 0


def cmd_run(args: argparse.Namespace) -> int:
    started = _utcnow()
    ldd = load_ldd(args.lexicon)
    rule_config = _load_rule_config(args.config)
    bins = _parse_bins(args.bins)
    reviews, report = load_dataset(args.input)
    preset_scale = load_scale(args.scale) if args.scale else None

    scored, scale = _score_reviews(reviews, ldd, rule_config, bins, args.workers, preset_scale)

    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_labeled(out, scored)
    scale_path = out.parent / (out.stem + ".scale.json")
    save_scale(scale, scale_path)
    outputs = {"labeled": str(out), "scale": str(scale_path)}

    if args.emit_plot_data:
        plot_path = out.parent / (out.stem + ".plot.csv")
        hist = {c.label: 0 for c in sorted(SentimentCategory, key=lambda c: -c.value)}
        for s in scored:
            hist[s.category.label] += 1
        with plot_path.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["category", "count"])
            for label, count in hist.items():
                writer.writerow([label, count])
        outputs["plot"] = str(plot_path)

    manifest_path = out.parent / (out.stem + ".manifest.json")
    _write_manifest(
        manifest_path,
        "run",
        args,
        rule_config,
        bins,
        scale,
        str(args.scale) if args.scale else "fitted",
        {
            "dataset": str(args.input),
            "dataset_sha256": _sha256(Path(args.input)),
            "lexicon": str(args.lexicon),
            "lexicon_sha256": _sha256(Path(args.lexicon)),
        },
        outputs,
        started,
    )
    print(
        f"scored {len(scored)} reviews ({report.dropped_null} null, "
        f"{report.dropped_duplicate} duplicate rows dropped) -> {out}"
    )
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    started = _utcnow()
    ldd = load_ldd(args.lexicon)
    rule_config = _load_rule_config(args.config)
    bins = _parse_bins(args.bins)
    reviews, _ = load_dataset(args.input)
    preset_scale = load_scale(args.scale) if args.scale else None
    scored, scale = _score_reviews(reviews, ldd, rule_config, bins, args.workers, preset_scale)

    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["id", "text", "label"])
        for s in scored:
            if args.label_column == "category":
                label = s.category.label
            elif args.label_column == "binary_pred":
                label = s.binary_pred
            else:
                label = s.gold_label or ""
            writer.writerow([s.id, s.text, label])

    manifest_path = out.parent / (out.stem + ".manifest.json")
    _write_manifest(
        manifest_path,
        "export",
        args,
        rule_config,
        bins,
        scale,
        str(args.scale) if args.scale else "fitted",
        {
            "dataset": str(args.input),
            "dataset_sha256": _sha256(Path(args.input)),
            "lexicon": str(args.lexicon),
            "label_column": args.label_column,
        },
        {"export": str(out)},
        started,
    )
    print(f"exported {len(scored)} rows ({args.label_column}) -> {out}")
    return 0


def _canonical_labels(values: set[str]) -> tuple[str, ...]:
    if values <= set(BINARY_LABEL_ORDER):
        return BINARY_LABEL_ORDER
    category_labels = tuple(c.label for c in sorted(SentimentCategory, key=lambda c: -c.value))
    if values <= set(category_labels):
        return category_labels
    return tuple(sorted(values))


def cmd_eval(args: argparse.Namespace) -> int:
    path = Path(args.input)
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise CorpusFormatError(f"{path}: empty file")
        for column in (args.gold_column, args.pred_column):
            if column not in reader.fieldnames:
                raise CorpusFormatError(f"{path}: column {column!r} not present")
        gold, pred = [], []
        for row in reader:
            gold.append(row[args.gold_column])
            pred.append(row[args.pred_column])

    labels = _canonical_labels(set(gold) | set(pred))
    matrix = confusion(gold, pred, labels)
    config: dict = {
        "input": str(path),
        "gold_column": args.gold_column,
        "pred_column": args.pred_column,
    }
    sidecar = path.parent / (path.stem + ".manifest.json")
    if sidecar.exists():
        config["run_manifest"] = json.loads(sidecar.read_text(encoding="utf-8"))
    report = weighted_metrics(matrix, config)

    print(render_report(report))
    if args.output:
        out = Path(args.output)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(report.to_json(), encoding="utf-8")
        if args.emit_plot_data:
            plot_path = out.parent / (out.stem + ".per_class.csv")
            plot_path.write_text(per_class_csv(report), encoding="utf-8")
    return 0


def cmd_validate_lexicon(args: argparse.Namespace) -> int:
    try:
        ldd, warnings = load_ldd_with_warnings(args.path)
    except LexiconError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1
    for warning in warnings:
        print(f"warning: {warning}")
    words = len(ldd.all_words())
    print(f"ok: {words} words across all lists, {len(ldd.double_negation_idioms)} idiom(s)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="banglasent", description=__doc__)
    parser.add_argument("--version", action="version", version=f"banglasent {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        p.add_argument("--lexicon", default=str(bundled_lexicon_path()), help="lexicon JSON path")
        p.add_argument("--config", default=None, help="rule-constant JSON path")
        p.add_argument("--bins", default=None, help="comma-separated positive bin edges")
        p.add_argument("--scale", default=None, help="previously fitted scale JSON path")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--workers", type=int, default=1)
        if with_input:
            p.add_argument("--input", required=True, help="dataset CSV (id,text,label)")
            p.add_argument("--output", required=True, help="output CSV path")
            p.add_argument("--emit-plot-data", action="store_true")

    p_score = sub.add_parser("score", help="score one review, optionally with a trace table")
    p_score.add_argument("text")
    p_score.add_argument("--trace", action="store_true", help="print the per-token trace table")
    common(p_score, with_input=False)
    p_score.set_defaults(func=cmd_score)

    p_run = sub.add_parser("run", help="score a dataset and write the labeled CSV")
    common(p_run)
    p_run.set_defaults(func=cmd_run)

    p_export = sub.add_parser("export", help="run, restricted to the harness id,text,label schema")
    common(p_export)
    p_export.add_argument("--label-column", choices=EXPORT_LABEL_COLUMNS, default="category")
    p_export.set_defaults(func=cmd_export)

    p_eval = sub.add_parser("eval", help="evaluate predictions in a labeled CSV")
    p_eval.add_argument("--input", required=True)
    p_eval.add_argument("--gold-column", default="gold_label")
    p_eval.add_argument("--pred-column", default="binary_pred")
    p_eval.add_argument("--output", default=None, help="report JSON path")
    p_eval.add_argument("--emit-plot-data", action="store_true")
    p_eval.set_defaults(func=cmd_eval)

    p_validate = sub.add_parser("validate-lexicon", help="check a lexicon file's invariants")
    p_validate.add_argument("path")
    p_validate.set_defaults(func=cmd_validate_lexicon)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (LexiconError, CorpusFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
