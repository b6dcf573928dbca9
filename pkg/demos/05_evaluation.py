"""
Evaluating simplified output
============================

SARI compares the system output with both the source and the references:
it rewards n-grams that are correctly added, kept and deleted. Copying the
source adds and deletes nothing, so its SARI is exactly a third of its keep
score. FKGL estimates a school grade from sentence length and syllables.
"""

from editsimp import corpus_sari, cwi_eval, fkgl, mock_backends, simplify
from editsimp.ccd import complex_word_predictions, detect
from editsimp.core import tokenize

sources = [
    "the massive crowd visited the substantial residence .",
    "numerous individuals purchased a residence subsequently .",
    "she demonstrated remarkable courage during the storm .",
]
references = [
    ["the huge crowd visited the large house .", "many people visited the big house ."],
    ["many people bought a house later .", "lots of people later bought a house ."],
    ["she showed great courage during the storm .", "she was brave in the storm ."],
]
ref_sets = [list(col) for col in zip(*references)]  # one list per reference set

backends = mock_backends()
outputs = [simplify(s, backends).final.text for s in sources]
for s, o in zip(sources, outputs):
    print(f"{s}\n  -> {o}")

identity = corpus_sari(sources, sources, ref_sets)
system = corpus_sari(sources, outputs, ref_sets)
print(f"\n{'':10}{'SARI':>8}{'add':>8}{'keep':>8}{'delete':>8}{'FKGL':>8}")
for name, r, corpus in [("identity", identity, sources), ("system", system, outputs)]:
    print(f"{name:10}{r.overall:8.2f}{r.add:8.2f}{r.keep:8.2f}{r.delete:8.2f}{fkgl(corpus):8.2f}")
print(f"identity keep / 3 = {identity.keep / 3:.2f}")

# complex word identification against hand tags
gold_words = "numerous individuals purchased a residence subsequently .".split()
gold_tags = [True, True, True, False, True, True, False]
s = tokenize(" ".join(gold_words))
m = detect(backends.classify_simplicity(s).attention, s)
pred = complex_word_predictions(m, s)
print("\npredicted complex:", [w for w, p in zip(gold_words, pred) if p])
print(cwi_eval(pred, gold_tags))
