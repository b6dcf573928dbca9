"""
Finding complex words from classifier attention
===============================================

The simplicity classifier's attention is summed over heads for every token.
Tokens whose total reaches the average (total attention / number of tokens)
are marked complex, and the complex content words become words the
paraphraser must avoid.
"""

import numpy as np

from editsimp import AttentionTensor, detect, tokenize
from editsimp.backends.mock import MockSimplicityClassifier

s = tokenize("below are some useful links to facilitate your involvement .")

# the mock classifier puts most attention on lexicon words
clf = MockSimplicityClassifier(lexicon=["facilitate"])
att = clf.attention(s)
np.set_printoptions(precision=3, suppress=True)
print("attention, one row per head:")
print(att.weights)

m = detect(att, s)
print(f"\nthreshold = {m.threshold_T:.4f}")
for tok, sc, flag in zip(s.tokens, m.token_scores, m.flags):
    print(f"  {tok:<12} {sc:.4f} {'complex' if flag else ''}")
print("negative constraints:", sorted(m.constraint_words))

# a hand-written two-head tensor: only the middle token clears 2/3
A = [[0.1, 0.7, 0.2], [0.2, 0.6, 0.2]]
m = detect(AttentionTensor.word_aligned(A), tokenize("a massive dog"))
print("\nscores", [round(x, 3) for x in m.token_scores], "threshold", round(m.threshold_T, 4),
      "flags", m.flags)
