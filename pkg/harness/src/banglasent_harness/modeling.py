"""Encoder construction and checkpoint I/O.

The default "tiny-random" preset builds a small randomly initialized
transformer encoder so the harness runs hermetically on CPU; a previously
saved checkpoint directory can be passed instead to continue from existing
weights (e.g. an actual pretrained Bengali encoder, when one is available
locally).
"""

from __future__ import annotations

import json
from pathlib import Path

import torch
from transformers import BertConfig, BertForSequenceClassification

TINY_PRESET = {
    "hidden_size": 32,
    "num_hidden_layers": 2,
    "num_attention_heads": 2,
    "intermediate_size": 64,
}


def build_model(
    model_id: str,
    vocab_size: int,
    num_labels: int,
    max_seq_len: int,
) -> BertForSequenceClassification:
    if model_id == "tiny-random":
        config = BertConfig(
            vocab_size=vocab_size,
            num_labels=num_labels,
            max_position_embeddings=max_seq_len,
            pad_token_id=0,
            **TINY_PRESET,
        )
        return BertForSequenceClassification(config)
    path = Path(model_id)
    if path.is_dir():
        return load_checkpoint(path)
    raise ValueError(
        f"model {model_id!r} is neither 'tiny-random' nor a checkpoint directory"
    )


def save_checkpoint(model: BertForSequenceClassification, out_dir: str | Path) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "config.json").write_text(model.config.to_json_string(), encoding="utf-8")
    torch.save(model.state_dict(), out / "model.pt")


def load_checkpoint(in_dir: str | Path) -> BertForSequenceClassification:
    src = Path(in_dir)
    config = BertConfig.from_dict(json.loads((src / "config.json").read_text(encoding="utf-8")))
    model = BertForSequenceClassification(config)
    state = torch.load(src / "model.pt", map_location="cpu", weights_only=True)
    model.load_state_dict(state)
    return model
