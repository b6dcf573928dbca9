"""
Steering the search with thresholds
===================================

Raising the removal factor makes removals harder to accept; raising the
meaning-preservation threshold rejects candidates that drift from the
original, so outputs stay longer. Both trends are checked here on 200
generated sentences with gold trees.
"""

from editsimp import EngineConfig, mock_backends, simplify
from editsimp.metrics import mean_length, trace_stats
from editsimp.synthetic import random_corpus

corpus = random_corpus(200, seed=7)
trees = {s.text: s.tree for s in corpus}
print("example:", corpus[0].text)
print("tree:   ", corpus[0].tree, "\n")


def run(**overrides):
    cfg = EngineConfig(**overrides)
    backends = mock_backends(trees=trees)
    return [simplify(s.text, backends, cfg) for s in corpus]


print("t_dl_rm  removals  mean length")
for t in (0.9, 1.0, 1.1, 1.2):
    traces = run(t_dl_rm=t)
    stats = trace_stats(traces)
    print(f"{t:7.2f}  {round(stats.removal * len(traces)):8d}  {mean_length([x.final for x in traces]):11.3f}")

print("\nmp_threshold  mean length  iterations  PA    RM    EX")
for mp in (0.25, 0.5, 0.6, 0.7):
    traces = run(mp_threshold=mp)
    st = trace_stats(traces)
    print(f"{mp:12.2f}  {mean_length([x.final for x in traces]):11.3f}  {st.iterations:10.3f}  "
          f"{st.paraphrase:.2f}  {st.removal:.2f}  {st.extraction:.2f}")
