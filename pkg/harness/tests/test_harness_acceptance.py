"""Acceptance criteria for the fine-tuning harness, one test per criterion."""

import json
import random
import time

import harness_support
from banglasent_harness import (
    build_model,
    classify_binary_to_nine,
    load_prepared,
    save_prepared,
    train_single_trial,
)
from banglasent_harness.cli import main as harness_main
from banglasent_harness.slicing import category_rank


def _pass(line: str) -> None:
    message = f"PASS: {line}"
    print(message)
    harness_support.ACCEPTANCE_LINES.append(message)


class TestSmokeChain:
    def test_prepare_finetune_evaluate_under_ten_minutes(
        self, nine_export, binary_export, tmp_path
    ):
        start = time.perf_counter()

        assert (
            harness_main(
                [
                    "prepare",
                    "--input",
                    str(nine_export),
                    "--out-dir",
                    str(tmp_path / "prep9"),
                    "--seed",
                    "42",
                    "--max-len",
                    "32",
                ]
            )
            == 0
        )
        assert (
            harness_main(
                [
                    "prepare",
                    "--input",
                    str(binary_export),
                    "--out-dir",
                    str(tmp_path / "prep2"),
                    "--seed",
                    "42",
                    "--max-len",
                    "32",
                ]
            )
            == 0
        )
        assert (
            harness_main(
                [
                    "finetune",
                    "--data",
                    str(tmp_path / "prep9"),
                    "--trials",
                    "2",
                    "--seed",
                    "42",
                    "--out-dir",
                    str(tmp_path / "run9"),
                ]
            )
            == 0
        )
        assert (
            harness_main(
                [
                    "finetune",
                    "--data",
                    str(tmp_path / "prep2"),
                    "--trials",
                    "2",
                    "--seed",
                    "43",
                    "--out-dir",
                    str(tmp_path / "run2"),
                ]
            )
            == 0
        )
        assert (
            harness_main(
                [
                    "evaluate",
                    "--nine-data",
                    str(tmp_path / "prep9"),
                    "--nine-model",
                    str(tmp_path / "run9"),
                    "--binary-data",
                    str(tmp_path / "prep2"),
                    "--binary-model",
                    str(tmp_path / "run2"),
                    "--out",
                    str(tmp_path / "comparison.json"),
                ]
            )
            == 0
        )
        elapsed = time.perf_counter() - start
        assert elapsed < 600, f"smoke chain took {elapsed:.0f}s"

        sweep_lines = (tmp_path / "run9" / "sweep.jsonl").read_text().splitlines()
        assert len(sweep_lines) == 2
        entries = [json.loads(line) for line in sweep_lines]
        assert all(e["status"] in ("ok", "diverged") for e in entries)
        # smoke property: training loss monotone non-increasing in >= 1 trial
        assert any(
            e["status"] == "ok"
            and all(
                a >= b - 1e-12
                for a, b in zip(e["epoch_mean_losses"], e["epoch_mean_losses"][1:])
            )
            for e in entries
        )
        comparison = json.loads((tmp_path / "comparison.json").read_text())
        assert set(comparison) == {"note", "pipeline1", "pipeline2", "delta"}
        assert len(comparison["pipeline1"]["labels"]) == 9
        _pass(
            f"harness smoke: prepare/finetune/evaluate with 2-trial sweeps on CPU "
            f"in {elapsed:.0f}s (< 600s)"
        )


class TestLabelMapRoundTrip:
    def test_encode_decode_exact_and_persisted(self, nine_data, tmp_path):
        save_prepared(nine_data, tmp_path / "prep")
        again = load_prepared(tmp_path / "prep")
        assert again.label_map == nine_data.label_map
        for label in nine_data.label_map:
            assert again.label_map[again.label_map.index(label)] == label
        _pass("label-map round-trip exact (in-memory and persisted)")


class TestHeadDimensionality:
    def test_nine_way_head(self, nine_data):
        model = build_model(
            "tiny-random", len(nine_data.vocab), nine_data.num_labels, nine_data.max_seq_len
        )
        assert nine_data.num_labels == 9
        assert model.config.num_labels == 9
        assert model.classifier.out_features == 9
        _pass("head dimensionality equals label-map size (9)")


class TestSlicingMonotonicity:
    def test_ten_thousand_probabilities(self):
        rng = random.Random(20240817)
        ps = sorted(rng.random() for _ in range(10_000))
        ranks = [category_rank(c) for c in classify_binary_to_nine(ps)]
        assert all(a <= b for a, b in zip(ranks, ranks[1:]))
        _pass("binary-to-nine slicing monotone over 10,000 random probabilities")


class TestFirstEpochLossDecrease:
    def test_eighty_percent_of_five_seeded_runs(self, nine_data):
        decreased = 0
        for seed in range(100, 105):
            result, _ = train_single_trial(
                nine_data, learning_rate=1e-3, batch_size=8, epochs=1, seed=seed
            )
            steps = result.first_epoch_step_losses
            half = len(steps) // 2
            first = sum(steps[:half]) / half
            second = sum(steps[half:]) / (len(steps) - half)
            decreased += first > second
        assert decreased >= 4, f"loss decreased in only {decreased}/5 seeded runs"
        _pass(f"first-epoch training loss decreased in {decreased}/5 seeded runs (>= 4)")
