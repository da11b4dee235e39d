"""Exhaustive agreement between the engine and the independently written
brute-force rule-table interpreter (tests/rule_oracle.py)."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from banglasent import RuleConfig, score_tokens
from toy_support import TOY_VOCAB
from rule_oracle import oracle_score


def all_sequences(max_len):
    for n in range(1, max_len + 1):
        yield from itertools.product(TOY_VOCAB, repeat=n)


def test_exhaustive_up_to_length_four(toy_ldd):
    config = RuleConfig()
    count = 0
    for seq in all_sequences(4):
        engine, _ = score_tokens(seq, toy_ldd, config)
        oracle = oracle_score(seq, toy_ldd, config)
        assert engine == oracle, f"divergence on {seq}: engine={engine!r} oracle={oracle!r}"
        count += 1
    assert count == 4680


def test_exhaustive_up_to_length_four_with_idiom(toy_ldd_with_idiom):
    config = RuleConfig()
    for seq in all_sequences(4):
        engine, _ = score_tokens(seq, toy_ldd_with_idiom, config)
        oracle = oracle_score(seq, toy_ldd_with_idiom, config)
        assert engine == oracle, f"divergence on {seq} (idiom lexicon)"


def test_empty_sequence_agrees(toy_ldd):
    assert score_tokens([], toy_ldd)[0] == oracle_score([], toy_ldd) == 0.0


@settings(max_examples=500)
@given(tokens=st.lists(st.sampled_from(TOY_VOCAB), min_size=5, max_size=10))
def test_random_longer_sequences_agree(tokens, toy_ldd):
    assert score_tokens(tokens, toy_ldd)[0] == oracle_score(tokens, toy_ldd)


@settings(max_examples=300)
@given(
    tokens=st.lists(st.sampled_from(TOY_VOCAB), min_size=5, max_size=10),
    multiplier=st.floats(min_value=1.1, max_value=3.0),
    amplifier=st.floats(min_value=0.5, max_value=2.5),
    factor=st.floats(min_value=-3.0, max_value=3.0),
    plain=st.floats(min_value=-2.0, max_value=-0.25),
)
def test_agreement_holds_for_other_constants(
    tokens, multiplier, amplifier, factor, plain, toy_ldd
):
    config = RuleConfig(
        extreme_multiplier=multiplier,
        phrase_negation_amplifier=amplifier,
        extreme_negation_factor=factor,
        plain_negation_multiplier=plain,
    )
    assert score_tokens(tokens, toy_ldd, config)[0] == oracle_score(tokens, toy_ldd, config)
