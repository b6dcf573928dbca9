"""
Two edits on a long news sentence
=================================

The first iteration cannot paraphrase the sentence (two of its complex words,
"nepalese" and "sherpa", have no replacement), so the best move is to remove
the trailing participial clause. In the shorter sentence the remaining
complex words do have replacements, and a paraphrase wins the second round.
"""

from editsimp import EngineConfig, mock_backends, replay_trace, simplify

SENTENCE = ("the announcement of the massive avalanche on mount everest shocked the climbing "
            "world , burying 25 nepalese sherpa guides under sheets of ice the size of houses .")
TREE = ("(S (NP (NP the announcement) (PP of (NP (NP the massive avalanche) (PP on (NP mount everest)))))"
        " (VP shocked (NP the climbing world)) (, ,)"
        " (S (VP burying (NP 25 nepalese sherpa guides)"
        " (PP under (NP (NP sheets) (PP of (NP ice))) (NP (NP the size) (PP of (NP houses))))))"
        " (. .))")

backends = mock_backends(trees={SENTENCE: TREE})
trace = simplify(SENTENCE, backends)

print("source:", trace.source.text)
print(f"        score {trace.source_score.total:.4f}")
for i, step in enumerate(trace.steps, 1):
    print(f"\nstep {i}: {step.kind.value}")
    for p in step.provenance:
        print("   ", p)
    print("   ", step.sentence.text)
    print(f"    score {step.score.total:.4f} (similarity {step.score.meaning_sim:.3f})")
print("\nstopped because:", trace.status)
print("chain replays under the default thresholds:", replay_trace(trace, EngineConfig()))

# the same search with deletion switched off does nothing
print("paraphrase only:", simplify(SENTENCE, backends, ops="pa").iterations, "steps")
