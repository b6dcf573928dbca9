"""
Scoring candidates and the acceptance gate
==========================================

A candidate's score is the classifier's probability that it is simple, kept
only if it stays close in meaning to the original (cosine >= 0.7) and still
reads as acceptable English (probability >= 0.3); otherwise it is zero.

A candidate replaces the current sentence only when its score beats the
current score times a per-operation factor: 0.8 for paraphrases (they may
even lose a little), 1.1 for removals and 1.25 for extractions (they must win
clearly).
"""

from editsimp import EngineConfig, ScoringContext, mock_backends, score, tokenize
from editsimp.core import Candidate, EditKind, ScoreBreakdown
from editsimp.search import SearchState, gate

backends = mock_backends()
cfg = EngineConfig()
original = tokenize("the massive crowd visited the substantial residence .")
ctx = ScoringContext(original, backends, cfg)

for text in [
    "the massive crowd visited the substantial residence .",
    "the huge crowd visited the substantial residence .",
    "the huge crowd visited the large house .",
    "the crowd visited .",
    "the massive crowd .",
]:
    sb = score(tokenize(text), ctx)
    print(f"{text:<56} simp={sb.simplicity:.3f} sim={sb.meaning_sim:.3f} "
          f"acc={sb.acceptability:.1f} -> total={sb.total:.3f}")

# the gate on hand-picked numbers
def candidate(total, kind):
    sb = ScoreBreakdown(total, 1.0, 1.0, True, True, total)
    return Candidate(tokenize("candidate"), kind, ({"constraints": []},), sb)

current = tokenize("current")
state = SearchState(current, ScoreBreakdown(0.6, 1, 1, True, True, 0.6), frozenset({current.tokens}), 0)
print()
for total, kind in [(0.5, EditKind.PARAPHRASE), (0.6, EditKind.DELETE_REMOVAL),
                    (0.7, EditKind.DELETE_REMOVAL), (0.7, EditKind.DELETE_EXTRACTION)]:
    t = cfg.threshold_for(kind)
    print(f"S(c)={total} vs S(c')*{t} = {0.6 * t:.3f} ({kind.value}): "
          f"{'accept' if gate(candidate(total, kind), state, cfg) else 'reject'}")
