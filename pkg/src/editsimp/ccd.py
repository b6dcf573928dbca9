"""Complex component detection from classifier attention.

Each content subtoken gets the attention [CLS] pays to it, summed over all
heads of the classifier's second layer. The threshold is the sum of those
scores divided by the number of subtokens, and a subtoken is complex when its
score reaches the threshold. Words collect the scores of their subtokens;
complex words that are not function words or punctuation become negative
constraints for the paraphraser.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .backends.base import AttentionTensor
from .core import STOPWORDS, Sentence, is_punct
from .errors import ContractViolation



@dataclass(frozen=True)
class ComplexityMarking:
    threshold_T: float
    token_scores: tuple[float, ...]
    flags: tuple[bool, ...]
    word_scores: tuple[float, ...]
    word_flags: tuple[bool, ...]
    constraint_words: frozenset[str]


def _reaches(values: np.ndarray, weights: np.ndarray, total: float) -> bool:
    """``sum(values) * N >= sum(weights)``, exact on the float inputs."""
    n = weights.shape[1]
    lhs = math.fsum(values.ravel()) * n
    if abs(lhs - total) > 1e-9 * max(total, 1e-300):
        return lhs > total
    exact_lhs = sum(map(Fraction, values.ravel().tolist()), Fraction(0)) * n
    exact_total = sum(map(Fraction, weights.ravel().tolist()), Fraction(0))
    return exact_lhs >= exact_total


def detect(att: AttentionTensor, s: Sentence, stopwords=STOPWORDS) -> ComplexityMarking:
    """Mark complex tokens and words of ``s`` from its attention tensor.

    >>> from editsimp.core import tokenize
    >>> m = detect(AttentionTensor.word_aligned([[0.8, 0.2]]), tokenize("facilitate it"))
    >>> m.threshold_T, m.flags
    (0.5, (True, False))
    """
    n_words = len(s.tokens)
    if any(not 0 <= i < n_words for i in att.token_map):
        raise ContractViolation(
            f"attention token_map does not fit sentence of {n_words} tokens (sentence id {s.id!r})"
        )
    weights = att.weights
    n = att.n_tokens
    total = math.fsum(weights.ravel())
    threshold = total / n
    scores = [math.fsum(weights[:, j]) for j in range(n)]
    flags = [_reaches(weights[:, j], weights, total) for j in range(n)]

    word_cols: dict[int, list[int]] = {}
    for j, w in enumerate(att.token_map):
        word_cols.setdefault(w, []).append(j)
    word_scores = [0.0] * n_words
    word_flags = [False] * n_words
    for w, cols in word_cols.items():
        word_scores[w] = math.fsum(weights[:, cols].ravel())
        word_flags[w] = _reaches(weights[:, cols], weights, total)

    constraint_words = frozenset(
        tok.lower() for tok, flagged in zip(s.tokens, word_flags)
        if flagged and not is_punct(tok) and tok.lower() not in stopwords
    )
    return ComplexityMarking(
        threshold_T=threshold,
        token_scores=tuple(scores),
        flags=tuple(flags),
        word_scores=tuple(word_scores),
        word_flags=tuple(word_flags),
        constraint_words=constraint_words,
    )


def complex_word_predictions(marking: ComplexityMarking, s: Sentence) -> list[bool]:
    """Per-word complex/not-complex tags as used for negative constraints."""
    return [flagged and tok.lower() in marking.constraint_words
            for tok, flagged in zip(s.tokens, marking.word_flags)]
