"""Rule engine: walk a filtered token stream left to right, maintain the
flag set, and accumulate a signed polarity score.

Scoring rules, applied per token by role:

* sentiment word (positive/negative lexicon): add its polarity score; if the
  extreme flag is pending the contribution is score * extreme_multiplier and
  the flag clears. The contribution joins the open conjunction group when an
  and-word is pending, otherwise it starts a fresh group.
* extreme word: sets the extreme flag, no score change.
* and-word: sets and/double flags, holds the conjunction group open for the
  next sentiment word.
* phrase initiator: sets the phrase flag, no score change.
* negation: exactly one branch fires, then the group closes —
    (a) phrase flag pending: adds last_base * phrase_negation_amplifier
        (amplifies instead of reversing; sign-symmetric), clears the flag;
    (b) most recent sentiment word was extreme-modified: adds
        last_base * extreme_negation_factor (last_base is the pre-extreme
        lexicon score);
    (c) otherwise the whole current conjunction group is reversed:
        score := score - group + group * plain_negation_multiplier.
  A negation terminating a configured double-negation idiom is cancelled
  outright (no score or state change). An applied negation consumes the
  extreme-modified state so it cannot fire branch (b) twice.
* unknown or stop word: no score change; closes the conjunction group.

Flags persist until consumed: an unknown word between a phrase initiator (or
extreme word) and the token that consumes the flag does not clear it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .lexicon import LexiconDataDictionary, RoleKind, lookup_role
from .textproc import TokenStream, preprocess

#: Trace "Location" labels, one per role.
LOCATION_LABELS = {
    RoleKind.POSITIVE: "Positive-Lexicon",
    RoleKind.NEGATIVE: "Negative-Lexicon",
    RoleKind.NEGATION: "Direct Negation",
    RoleKind.EXTREME: "Extreme Word",
    RoleKind.PHRASE_INITIATOR: "Phrase-Initial",
    RoleKind.AND_WORD: "and-word",
    RoleKind.STOP_WORD: "Stop-Word",
    RoleKind.UNKNOWN: "None",
}


@dataclass(frozen=True)
class RuleConfig:
    """Numeric constants of the rule table (defaults from the worked examples)."""

    extreme_multiplier: float = 1.6
    phrase_negation_amplifier: float = 1.5
    extreme_negation_factor: float = -2.0
    plain_negation_multiplier: float = -1.0

    def __post_init__(self) -> None:
        if not self.extreme_multiplier > 1:
            raise ValueError("extreme_multiplier must be > 1")
        if not self.phrase_negation_amplifier > 0:
            raise ValueError("phrase_negation_amplifier must be > 0")
        if not self.plain_negation_multiplier < 0:
            raise ValueError("plain_negation_multiplier must be < 0")

    def as_dict(self) -> dict[str, float]:
        return {
            "extreme_multiplier": self.extreme_multiplier,
            "phrase_negation_amplifier": self.phrase_negation_amplifier,
            "extreme_negation_factor": self.extreme_negation_factor,
            "plain_negation_multiplier": self.plain_negation_multiplier,
        }


@dataclass
class EngineState:
    """Flag set and running score of one review evaluation."""

    score: float = 0.0
    group_score: float = 0.0
    last_base: float = 0.0
    neg_flag: bool = False
    pos_word_flag: bool = False
    neg_word_flag: bool = False
    extreme_flag: bool = False
    phrase_flag: bool = False
    pure_pos_flag: bool = False
    pure_neg_flag: bool = False
    and_flag: bool = False
    double_flag: bool = False
    # True while the most recent sentiment word took the extreme multiplier
    # and no negation has consumed that state yet.
    last_extreme_applied: bool = False
    # True once any amplifier or negation has reshaped the running score;
    # gates only the pure_pos/pure_neg bookkeeping flags.
    modified: bool = False

    def _refresh_purity(self) -> None:
        self.pure_pos_flag = self.pos_word_flag and not self.neg_word_flag and not self.modified
        self.pure_neg_flag = self.neg_word_flag and not self.pos_word_flag and not self.modified

    def flag_names(self) -> tuple[str, ...]:
        pairs = (
            ("neg", self.neg_flag),
            ("pos-word", self.pos_word_flag),
            ("neg-word", self.neg_word_flag),
            ("extreme", self.extreme_flag),
            ("phrase", self.phrase_flag),
            ("pure-pos", self.pure_pos_flag),
            ("pure-neg", self.pure_neg_flag),
            ("and", self.and_flag),
            ("double", self.double_flag),
        )
        return tuple(name for name, on in pairs if on)


@dataclass(frozen=True)
class TraceEntry:
    token: str
    location: str
    score: float
    calculation: str
    flags: tuple[str, ...] = ()


ScoreTrace = tuple[TraceEntry, ...]


def _fmt(value: float) -> str:
    if value == 0:
        return "0"
    return f"{value:.10g}"


def _idiom_tail(tokens: Sequence[str], i: int, ldd: LexiconDataDictionary) -> bool:
    """Does the negation at position i terminate a double-negation idiom?"""
    for idiom in ldd.double_negation_idioms:
        n = len(idiom)
        if i + 1 >= n and tuple(tokens[i + 1 - n : i + 1]) == idiom:
            return True
    return False


def score_tokens(
    tokens: Union[TokenStream, Sequence[str]],
    ldd: LexiconDataDictionary,
    config: RuleConfig = RuleConfig(),
) -> tuple[float, ScoreTrace]:
    """Score an already filtered, normalized token sequence.

    Returns the raw signed score and a per-token trace (one entry per token;
    the last entry's score is the final raw score). Empty input scores 0.
    """
    if isinstance(tokens, TokenStream):
        tokens = tokens.tokens
    tokens = list(tokens)

    st = EngineState()
    trace: list[TraceEntry] = []

    for i, token in enumerate(tokens):
        role = lookup_role(token, ldd)
        kind = role.kind
        prev = st.score
        calc = "None"
        transient_neg = False

        if role.is_sentiment:
            base = float(role.score)  # type: ignore[arg-type]
            if st.extreme_flag:
                contribution = base * config.extreme_multiplier
                calc = (
                    f"{_fmt(base)} * {_fmt(config.extreme_multiplier)}"
                    if prev == 0
                    else f"{_fmt(prev)} + {_fmt(base)} * {_fmt(config.extreme_multiplier)}"
                )
                st.extreme_flag = False
                st.last_extreme_applied = True
                st.modified = True
            else:
                contribution = base
                calc = f"{_fmt(prev)} + {_fmt(base)}"
                st.last_extreme_applied = False
            st.score = prev + contribution
            if st.and_flag:
                st.group_score += contribution
                st.and_flag = False
                st.double_flag = False
            else:
                st.group_score = contribution
            st.last_base = base
            if kind is RoleKind.POSITIVE:
                st.pos_word_flag = True
            else:
                st.neg_word_flag = True

        elif kind is RoleKind.EXTREME:
            st.extreme_flag = True

        elif kind is RoleKind.AND_WORD:
            st.and_flag = True
            st.double_flag = True

        elif kind is RoleKind.PHRASE_INITIATOR:
            st.phrase_flag = True

        elif kind is RoleKind.NEGATION:
            if _idiom_tail(tokens, i, ldd):
                calc = "None"  # double negation: the negation cancels itself
            else:
                transient_neg = True
                if st.phrase_flag:
                    # |last_base| * amplifier * sign(last_base) == last_base * amplifier
                    delta = st.last_base * config.phrase_negation_amplifier
                    st.score = prev + delta
                    if st.last_base != 0:
                        calc = (
                            f"{_fmt(prev)} + {_fmt(st.last_base)}"
                            f" * {_fmt(config.phrase_negation_amplifier)}"
                        )
                        st.modified = True
                    st.phrase_flag = False
                elif st.last_extreme_applied:
                    delta = st.last_base * config.extreme_negation_factor
                    st.score = prev + delta
                    if st.last_base != 0:
                        calc = (
                            f"{_fmt(prev)} + ({_fmt(st.last_base)}"
                            f" * {_fmt(config.extreme_negation_factor)})"
                        )
                        st.modified = True
                else:
                    group = st.group_score
                    st.score = (prev - group) + group * config.plain_negation_multiplier
                    if group != 0:
                        if prev == group:
                            calc = f"{_fmt(group)} * {_fmt(config.plain_negation_multiplier)}"
                        else:
                            calc = (
                                f"{_fmt(prev)} - {_fmt(group)} + {_fmt(group)}"
                                f" * {_fmt(config.plain_negation_multiplier)}"
                            )
                        st.modified = True
                st.last_extreme_applied = False
                st.group_score = 0.0
                st.and_flag = False
                st.double_flag = False

        else:  # UNKNOWN or defensive STOP_WORD: closes the conjunction group
            st.group_score = 0.0
            st.and_flag = False
            st.double_flag = False

        st._refresh_purity()
        if transient_neg:
            st.neg_flag = True
        trace.append(
            TraceEntry(
                token=token,
                location=LOCATION_LABELS[kind],
                score=st.score,
                calculation=calc,
                flags=st.flag_names(),
            )
        )
        st.neg_flag = False

    return st.score, tuple(trace)


def score_review(
    text: str,
    ldd: LexiconDataDictionary,
    config: RuleConfig = RuleConfig(),
) -> tuple[float, ScoreTrace]:
    """Tokenize, normalize, stop-filter, then score. Empty text scores 0."""
    return score_tokens(preprocess(text, ldd), ldd, config)


def render_trace(trace: ScoreTrace) -> str:
    """Plain-text four-column table: Token | Location | Score | Calculation."""
    header = ("Token", "Location", "Score", "Calculation")
    rows = [header] + [
        (entry.token, entry.location, _fmt(entry.score), entry.calculation) for entry in trace
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = []
    for idx, row in enumerate(rows):
        lines.append(" | ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
        if idx == 0:
            lines.append("-+-".join("-" * w for w in widths))
    return "\n".join(lines)
