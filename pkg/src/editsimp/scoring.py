"""Candidate scoring: simplicity probability gated by two hard filters."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .backends.base import Backends
from .core import EngineConfig, ScoreBreakdown, Sentence
from .errors import BackendError, ContractViolation


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    nu = math.sqrt(float(np.dot(u, u)))
    nv = math.sqrt(float(np.dot(v, v)))
    if nu == 0.0 or nv == 0.0:
        raise ContractViolation("cosine similarity of a zero vector is undefined")
    # clip: rounding can push the self-similarity a hair above 1
    return max(-1.0, min(1.0, float(np.dot(u, v)) / (nu * nv)))


@dataclass(frozen=True)
class ScoringContext:
    """Everything needed to score candidates against one original sentence."""

    original: Sentence
    backends: Backends
    config: EngineConfig
    original_embedding: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "original_embedding", self.backends.embed(self.original))


def meaning_filter(c: Sentence, ctx: ScoringContext, threshold: float | None = None):
    """Return ``(similarity, passed)`` for the meaning-preservation filter."""
    t = ctx.config.mp_threshold if threshold is None else threshold
    sim = cosine(ctx.backends.embed(c), ctx.original_embedding)
    return sim, sim >= t


def acceptability_filter(c: Sentence, ctx: ScoringContext, threshold: float | None = None):
    """Return ``(probability, passed)`` for the linguistic-acceptability filter."""
    t = ctx.config.la_threshold if threshold is None else threshold
    prob = ctx.backends.classify_acceptability(c)
    return prob, prob >= t


def combine(simplicity: float, meaning_sim: float, acceptability: float,
            config: EngineConfig) -> ScoreBreakdown:
    """Build the breakdown from raw component values.

    The filters act as 0/1 indicators, so the total is either exactly the
    simplicity probability or exactly zero.
    """
    mp_pass = meaning_sim >= config.mp_threshold
    la_pass = acceptability >= config.la_threshold
    total = simplicity if (mp_pass and la_pass) else 0.0
    return ScoreBreakdown(
        simplicity=simplicity,
        meaning_sim=meaning_sim,
        acceptability=acceptability,
        mp_pass=mp_pass,
        la_pass=la_pass,
        total=total,
    )


def score(c: Sentence, ctx: ScoringContext) -> ScoreBreakdown:
    try:
        simplicity = ctx.backends.classify_simplicity(c).prob_simple
        sim, _ = meaning_filter(c, ctx)
        acc, _ = acceptability_filter(c, ctx)
    except BackendError as exc:
        raise BackendError(f"scoring failed for candidate {c.text!r}: {exc}",
                           sentence_id=c.id) from exc
    return combine(simplicity, sim, acc, ctx.config)
