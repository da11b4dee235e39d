"""Turn a labeled review CSV into padded, masked, label-encoded tensors.

Consumes the scoring pipeline's CSV exports (either the three-column
id,text,label schema or the full labeled schema with a --label-column pick),
splits 80/20 under a seed, builds a word-level vocabulary from the training
texts, and persists everything needed to train and evaluate.
"""

from __future__ import annotations

import csv
import json
import random
import re
import unicodedata
from dataclasses import dataclass
from pathlib import Path

import numpy as np

PAD, UNK, CLS, SEP = "[PAD]", "[UNK]", "[CLS]", "[SEP]"
SPECIALS = (PAD, UNK, CLS, SEP)

#: Canonical nine-way label order (most positive first); part of the CSV
#: contract with the scoring pipeline.
NINE_LABELS = (
    "Extremely Positive",
    "Considerably Positive",
    "Positive",
    "Slightly Positive",
    "Neutral",
    "Slightly Negative",
    "Negative",
    "Considerably Negative",
    "Extremely Negative",
)
BINARY_LABELS = ("positive", "negative")


def _bengali_chars() -> str:
    chars = []
    for cp in range(0x0980, 0x0A00):
        cat = unicodedata.category(chr(cp))
        if cat.startswith(("L", "M")) or cat == "Nd":
            chars.append(chr(cp))
    return "".join(chars)


_TOKEN_RE = re.compile(f"[A-Za-z0-9{_bengali_chars()}]+")


def word_tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(unicodedata.normalize("NFC", text).casefold())


@dataclass
class PreparedSplit:
    ids: np.ndarray          # (n,) unicode review ids
    input_ids: np.ndarray    # (n, max_len) int64
    attention_mask: np.ndarray  # (n, max_len) int64; 0 exactly on padding
    labels: np.ndarray       # (n,) int64 indices into the label map


@dataclass
class PreparedData:
    train: PreparedSplit
    test: PreparedSplit
    label_map: list[str]
    vocab: list[str]
    max_seq_len: int
    meta: dict

    @property
    def num_labels(self) -> int:
        return len(self.label_map)


def read_labeled_csv(path: str | Path, label_column: str) -> tuple[list[str], list[str], list[str]]:
    """Return (ids, texts, labels) from a CSV with id, text, and a label column."""
    path = Path(path)
    ids, texts, labels = [], [], []
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ValueError(f"{path}: empty file")
        for column in ("id", "text", label_column):
            if column not in reader.fieldnames:
                raise ValueError(f"{path}: column {column!r} not present")
        for lineno, row in enumerate(reader, start=2):
            label = (row[label_column] or "").strip()
            if not label:
                raise ValueError(f"{path}:{lineno}: unknown label value {row[label_column]!r}")
            ids.append(row["id"])
            texts.append(row["text"])
            labels.append(label)
    return ids, texts, labels


def make_label_map(labels: list[str]) -> list[str]:
    """Contiguous, deterministic label order: canonical nine-way or binary
    order when the values fit one of those sets, sorted otherwise."""
    values = set(labels)
    if values <= set(NINE_LABELS):
        return [l for l in NINE_LABELS if l in values]
    if values <= set(BINARY_LABELS):
        return [l for l in BINARY_LABELS if l in values]
    return sorted(values)


def build_vocab(texts: list[str], max_size: int = 8000) -> list[str]:
    counts: dict[str, int] = {}
    for text in texts:
        for token in word_tokenize(text):
            counts[token] = counts.get(token, 0) + 1
    # frequency-then-lexicographic keeps the vocabulary deterministic
    ranked = sorted(counts, key=lambda t: (-counts[t], t))
    return list(SPECIALS) + ranked[: max_size - len(SPECIALS)]


def encode_text(text: str, vocab_index: dict[str, int], max_len: int) -> tuple[list[int], list[int]]:
    tokens = word_tokenize(text)[: max_len - 2]
    ids = [vocab_index[CLS]]
    ids += [vocab_index.get(t, vocab_index[UNK]) for t in tokens]
    ids.append(vocab_index[SEP])
    mask = [1] * len(ids)
    pad = max_len - len(ids)
    ids += [vocab_index[PAD]] * pad
    mask += [0] * pad
    return ids, mask


def _encode_split(
    ids: list[str],
    texts: list[str],
    labels: list[str],
    vocab_index: dict[str, int],
    label_index: dict[str, int],
    max_len: int,
) -> PreparedSplit:
    input_ids, masks, label_ids = [], [], []
    for text, label in zip(texts, labels):
        encoded, mask = encode_text(text, vocab_index, max_len)
        input_ids.append(encoded)
        masks.append(mask)
        label_ids.append(label_index[label])
    return PreparedSplit(
        ids=np.array(ids, dtype=object) if ids else np.empty(0, dtype=object),
        input_ids=np.array(input_ids, dtype=np.int64).reshape(len(texts), max_len),
        attention_mask=np.array(masks, dtype=np.int64).reshape(len(texts), max_len),
        labels=np.array(label_ids, dtype=np.int64),
    )


def prepare(
    input_csv: str | Path,
    label_column: str = "label",
    train_fraction: float = 0.8,
    seed: int = 42,
    max_seq_len: int = 48,
) -> PreparedData:
    """Split, tokenize, pad, mask, and label-encode a labeled CSV."""
    ids, texts, labels = read_labeled_csv(input_csv, label_column)
    if not ids:
        raise ValueError(f"{input_csv}: no rows")

    order = list(range(len(ids)))
    random.Random(seed).shuffle(order)
    n_train = round(train_fraction * len(order))
    train_idx, test_idx = order[:n_train], order[n_train:]
    if not train_idx or not test_idx:
        raise ValueError(
            f"empty split: {len(train_idx)} train / {len(test_idx)} test rows"
        )

    label_map = make_label_map(labels)
    label_index = {label: i for i, label in enumerate(label_map)}
    vocab = build_vocab([texts[i] for i in train_idx])
    vocab_index = {token: i for i, token in enumerate(vocab)}

    def take(idx):
        return [ids[i] for i in idx], [texts[i] for i in idx], [labels[i] for i in idx]

    train = _encode_split(*take(train_idx), vocab_index, label_index, max_seq_len)
    test = _encode_split(*take(test_idx), vocab_index, label_index, max_seq_len)
    meta = {
        "source": str(input_csv),
        "label_column": label_column,
        "train_fraction": train_fraction,
        "seed": seed,
        "max_seq_len": max_seq_len,
        "train_rows": len(train_idx),
        "test_rows": len(test_idx),
    }
    return PreparedData(train, test, label_map, vocab, max_seq_len, meta)


def save_prepared(data: PreparedData, out_dir: str | Path) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, split in (("train", data.train), ("test", data.test)):
        np.savez(
            out / f"{name}.npz",
            ids=split.ids.astype(str),
            input_ids=split.input_ids,
            attention_mask=split.attention_mask,
            labels=split.labels,
        )
    (out / "label_map.json").write_text(
        json.dumps({"labels": data.label_map}, ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8",
    )
    (out / "vocab.json").write_text(
        json.dumps({"tokens": data.vocab}, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    (out / "meta.json").write_text(
        json.dumps(data.meta, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )


def load_prepared(in_dir: str | Path) -> PreparedData:
    src = Path(in_dir)
    splits = {}
    for name in ("train", "test"):
        with np.load(src / f"{name}.npz", allow_pickle=False) as npz:
            splits[name] = PreparedSplit(
                ids=npz["ids"],
                input_ids=npz["input_ids"],
                attention_mask=npz["attention_mask"],
                labels=npz["labels"],
            )
    label_map = json.loads((src / "label_map.json").read_text(encoding="utf-8"))["labels"]
    vocab = json.loads((src / "vocab.json").read_text(encoding="utf-8"))["tokens"]
    meta = json.loads((src / "meta.json").read_text(encoding="utf-8"))
    return PreparedData(
        splits["train"], splits["test"], label_map, vocab, meta["max_seq_len"], meta
    )
