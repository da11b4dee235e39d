import csv

import numpy as np
import pytest

from banglasent_harness import NINE_LABELS, load_prepared, prepare, save_prepared
from banglasent_harness.data_prep import PAD, word_tokenize


def write_csv(path, rows):
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "text", "label"])
        writer.writerows(rows)


@pytest.fixture()
def small_csv(tmp_path):
    rows = [(f"r{i}", f"পণ্য নম্বর {i} ভালো জিনিস", "positive" if i % 3 else "negative") for i in range(20)]
    path = tmp_path / "small.csv"
    write_csv(path, rows)
    return path


class TestPrepare:
    def test_eighty_twenty_split(self, small_csv):
        data = prepare(small_csv, seed=1)
        assert len(data.train.labels) == 16
        assert len(data.test.labels) == 4

    def test_deterministic_under_seed(self, small_csv):
        a = prepare(small_csv, seed=5)
        b = prepare(small_csv, seed=5)
        assert np.array_equal(a.train.input_ids, b.train.input_ids)
        assert np.array_equal(a.test.labels, b.test.labels)
        assert list(a.train.ids) == list(b.train.ids)
        assert a.label_map == b.label_map

    def test_different_seed_changes_split(self, small_csv):
        a = prepare(small_csv, seed=1)
        b = prepare(small_csv, seed=2)
        assert list(a.test.ids) != list(b.test.ids)

    def test_nine_category_export_has_at_most_nine_label_ids(self, nine_data):
        distinct = set(nine_data.train.labels) | set(nine_data.test.labels)
        assert len(distinct) <= 9
        assert set(nine_data.label_map) <= set(NINE_LABELS)

    def test_label_map_round_trip(self, nine_data):
        for label in nine_data.label_map:
            encoded = nine_data.label_map.index(label)
            assert nine_data.label_map[encoded] == label

    def test_mask_reconstructs_original_lengths(self, small_csv):
        data = prepare(small_csv, seed=1, max_seq_len=32)
        rows = {rid: text for rid, text, _ in csv.reader(small_csv.open(encoding="utf-8")) if rid != "id"}
        for split in (data.train, data.test):
            for rid, mask in zip(split.ids, split.attention_mask):
                want = min(len(word_tokenize(rows[rid])) + 2, 32)
                assert int(mask.sum()) == want

    def test_mask_zero_exactly_on_padding(self, nine_data):
        pad_id = nine_data.vocab.index(PAD)
        for split in (nine_data.train, nine_data.test):
            padding = split.input_ids == pad_id
            assert np.array_equal(split.attention_mask == 0, padding)

    def test_long_sequence_truncated_mask_all_ones(self, tmp_path):
        path = tmp_path / "long.csv"
        write_csv(path, [("a", "ভালো " * 100, "positive"), ("b", "খারাপ", "negative"),
                         ("c", "মন্দ", "negative"), ("d", "চমৎকার", "positive"),
                         ("e", "বাজে জিনিস", "negative")])
        data = prepare(path, seed=3, max_seq_len=16)
        all_rows = np.concatenate([data.train.ids, data.test.ids])
        all_masks = np.concatenate([data.train.attention_mask, data.test.attention_mask])
        mask = all_masks[list(all_rows).index("a")]
        assert mask.shape == (16,)
        assert mask.sum() == 16

    def test_empty_label_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        write_csv(path, [("a", "ভালো", "")])
        with pytest.raises(ValueError, match="unknown label"):
            prepare(path)

    def test_empty_split_rejected(self, tmp_path):
        path = tmp_path / "one.csv"
        write_csv(path, [("a", "ভালো", "positive")])
        with pytest.raises(ValueError, match="empty split"):
            prepare(path)

    def test_missing_column_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("id,text\na,b\n", encoding="utf-8")
        with pytest.raises(ValueError, match="label"):
            prepare(path)


class TestPersistence:
    def test_save_load_round_trip(self, small_csv, tmp_path):
        data = prepare(small_csv, seed=9)
        save_prepared(data, tmp_path / "prep")
        again = load_prepared(tmp_path / "prep")
        assert again.label_map == data.label_map
        assert again.vocab == data.vocab
        assert np.array_equal(again.train.input_ids, data.train.input_ids)
        assert np.array_equal(again.test.attention_mask, data.test.attention_mask)
        assert np.array_equal(again.train.labels, data.train.labels)
        assert list(again.test.ids) == list(data.test.ids)
        assert again.max_seq_len == data.max_seq_len
