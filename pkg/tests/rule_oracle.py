"""Brute-force interpreter of the scoring rule table, used as an independent
oracle against the engine.

Deliberately stateless: every decision (pending extreme, pending phrase,
conjunction-group membership, idiom cancellation) is recomputed per token by
scanning backwards over the raw token list, instead of carrying the engine's
forward flag machine. Arithmetic expression shapes mirror the rule table
(single-multiply contributions, left-to-right group sums, (score - g) + g*m)
so that agreement with the engine is exact, not approximate.
"""

from __future__ import annotations

from typing import Sequence

from banglasent.engine import RuleConfig
from banglasent.lexicon import LexiconDataDictionary, RoleKind, lookup_role

_SENTIMENT = (RoleKind.POSITIVE, RoleKind.NEGATIVE)
_CLOSERS = (RoleKind.UNKNOWN, RoleKind.STOP_WORD)


def oracle_score(
    tokens: Sequence[str],
    ldd: LexiconDataDictionary,
    config: RuleConfig = RuleConfig(),
) -> float:
    tokens = list(tokens)
    kinds: list[RoleKind] = []
    bases: list[float] = []
    for token in tokens:
        role = lookup_role(token, ldd)
        kinds.append(role.kind)
        bases.append(role.score if role.score is not None else 0.0)

    def cancelled(i: int) -> bool:
        for idiom in ldd.double_negation_idioms:
            n = len(idiom)
            if i + 1 >= n and tuple(tokens[i + 1 - n : i + 1]) == idiom:
                return True
        return False

    applied_negation = [
        kinds[i] is RoleKind.NEGATION and not cancelled(i) for i in range(len(tokens))
    ]

    def extreme_pending(i: int) -> bool:
        # an extreme word not yet consumed by a sentiment word; negations and
        # unknowns do not clear it
        for j in range(i - 1, -1, -1):
            if kinds[j] is RoleKind.EXTREME:
                return True
            if kinds[j] in _SENTIMENT:
                return False
        return False

    def contribution(i: int) -> float:
        if extreme_pending(i):
            return bases[i] * config.extreme_multiplier
        return bases[i]

    def last_sentiment(i: int) -> int | None:
        for j in range(i - 1, -1, -1):
            if kinds[j] in _SENTIMENT:
                return j
        return None

    def phrase_pending(i: int) -> bool:
        # consumed by the first applied negation after it; survives everything else
        for j in range(i - 1, -1, -1):
            if applied_negation[j]:
                return False
            if kinds[j] is RoleKind.PHRASE_INITIATOR:
                return True
        return False

    def extreme_negation_applies(i: int) -> bool:
        # most recent sentiment word took the extreme multiplier, and no applied
        # negation has consumed that state since
        for j in range(i - 1, -1, -1):
            if applied_negation[j]:
                return False
            if kinds[j] in _SENTIMENT:
                return extreme_pending(j)
        return False

    def is_boundary(j: int) -> bool:
        return kinds[j] in _CLOSERS or applied_negation[j]

    def group(i: int) -> float:
        # trailing run of and-linked sentiment words before i, with no group
        # boundary inside; extreme and phrase-initiator tokens are transparent
        newest = None
        for j in range(i - 1, -1, -1):
            if is_boundary(j):
                break
            if kinds[j] in _SENTIMENT:
                newest = j
                break
        if newest is None:
            return 0.0
        chain = [newest]
        while True:
            prev = last_sentiment(chain[0])
            if prev is None:
                break
            gap = range(prev + 1, chain[0])
            if any(is_boundary(j) for j in gap):
                break
            if not any(kinds[j] is RoleKind.AND_WORD for j in gap):
                break
            chain.insert(0, prev)
        total = 0.0
        for j in chain:
            total += contribution(j)
        return total

    score = 0.0
    for i, kind in enumerate(kinds):
        if kind in _SENTIMENT:
            score = score + contribution(i)
        elif kind is RoleKind.NEGATION and not cancelled(i):
            anchor = last_sentiment(i)
            last_base = bases[anchor] if anchor is not None else 0.0
            if phrase_pending(i):
                score = score + last_base * config.phrase_negation_amplifier
            elif extreme_negation_applies(i):
                score = score + last_base * config.extreme_negation_factor
            else:
                g = group(i)
                score = (score - g) + g * config.plain_negation_multiplier
    return score
