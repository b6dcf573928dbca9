"""The iterative simplification loop.

Each iteration proposes one paraphrase and a batch of deletions of the
current sentence, scores them against the original, keeps those that beat
``score(current) * t_op`` for their operation and were never visited before,
and moves to the best survivor. The loop ends when nothing survives or the
iteration cap is reached.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from .backends.base import Backends
from .core import (
    Candidate,
    EngineConfig,
    ScoreBreakdown,
    Sentence,
    SimplificationTrace,
    as_sentence,
)
from .edit_ops import generate_deletion_candidates, generate_paraphrase_candidate, merge_duplicates
from .errors import BackendError
from .scoring import ScoringContext, score

log = logging.getLogger(__name__)

PARAPHRASE = "pa"
DELETION = "dl"
ALL_OPS = frozenset({PARAPHRASE, DELETION})


def parse_ops(spec: str | Iterable[str]) -> frozenset[str]:
    """``"pa,dl"`` -> ``{"pa", "dl"}``; rejects unknown or empty selections."""
    items = spec.split(",") if isinstance(spec, str) else list(spec)
    ops = frozenset(i.strip().lower() for i in items if i.strip())
    if not ops or not ops <= ALL_OPS:
        raise ValueError(f"operations must be a non-empty subset of pa,dl; got {spec!r}")
    return ops


@dataclass(frozen=True)
class SearchState:
    current: Sentence
    current_score: ScoreBreakdown
    visited: frozenset[tuple[str, ...]]
    iteration: int
    steps: tuple[Candidate, ...] = ()


@dataclass(frozen=True)
class Terminated:
    reason: str  # no_candidates | all_filtered | backend_error | max_iterations
    candidates: tuple[Candidate, ...] = ()


def gate(candidate: Candidate, state: SearchState, config: EngineConfig) -> bool:
    """Accept when the candidate beats the current score by its operation's factor."""
    if candidate.sentence.tokens in state.visited:
        return False
    return candidate.score.total > state.current_score.total * config.threshold_for(candidate.kind)


def select(survivors: list[Candidate]) -> Candidate:
    """Highest total; ties go to the paraphrase, then to deletions by (depth, start)."""
    return min(survivors, key=lambda c: (-c.score.total, c.order))


def propose(current: Sentence, backends: Backends, ops=ALL_OPS) -> list[Candidate]:
    candidates: list[Candidate] = []
    if PARAPHRASE in ops:
        para = generate_paraphrase_candidate(current, backends)
        if para is not None:
            candidates.append(para)
    if DELETION in ops:
        candidates.extend(generate_deletion_candidates(current, backends))
    return merge_duplicates(candidates)


def initial_state(ctx: ScoringContext) -> SearchState:
    s = ctx.original
    return SearchState(current=s, current_score=score(s, ctx),
                       visited=frozenset({s.tokens}), iteration=0)


def step(state: SearchState, ctx: ScoringContext, ops=ALL_OPS) -> SearchState | Terminated:
    config = ctx.config
    if state.iteration >= config.max_iterations:
        return Terminated("max_iterations")
    proposals = propose(state.current, ctx.backends, ops)
    if not proposals:
        return Terminated("no_candidates")
    scored = []
    for cand in proposals:
        try:
            scored.append(cand.with_score(score(cand.sentence, ctx)))
        except BackendError as exc:
            log.warning("dropping candidate %r: %s", cand.sentence.text, exc)
    if not scored:
        return Terminated("backend_error")
    survivors = [c for c in scored if gate(c, state, config)]
    if not survivors:
        return Terminated("all_filtered", tuple(scored))
    best = select(survivors)
    return SearchState(
        current=best.sentence,
        current_score=best.score,
        visited=state.visited | {best.sentence.tokens},
        iteration=state.iteration + 1,
        steps=state.steps + (best,),
    )


def simplify(s: Sentence | str, backends: Backends, config: EngineConfig | None = None,
             ops=ALL_OPS) -> SimplificationTrace:
    """Run the search on one sentence and return its trace."""
    config = config or EngineConfig()
    s = as_sentence(s)
    ops = parse_ops(ops)
    try:
        ctx = ScoringContext(s, backends, config)
        state = initial_state(ctx)
        source_score = state.current_score
    except BackendError as exc:
        log.error("cannot score source sentence %r: %s", s.text, exc)
        zero = ScoreBreakdown(0.0, 0.0, 0.0, False, False, 0.0)
        return SimplificationTrace(source=s, source_score=zero, status="backend_error")
    while True:
        nxt = step(state, ctx, ops)
        if isinstance(nxt, Terminated):
            return SimplificationTrace(source=s, source_score=source_score,
                                       steps=state.steps, status=nxt.reason)
        state = nxt


def simplify_corpus(sentences, backends: Backends, config: EngineConfig | None = None,
                    ops=ALL_OPS, workers: int = 1) -> list[SimplificationTrace]:
    """Simplify many sentences; results keep input order for any worker count."""
    config = config or EngineConfig()
    sentences = list(sentences)
    if workers <= 1:
        return [simplify(s, backends, config, ops) for s in sentences]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda s: simplify(s, backends, config, ops), sentences))
