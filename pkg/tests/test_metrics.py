import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from oracles import confusion, fkgl_direct, sari_bruteforce

from editsimp.core import (
    Candidate,
    EditKind,
    ScoreBreakdown,
    SimplificationTrace,
    tokenize,
)
from editsimp.errors import EmptyInputError, ValidationError
from editsimp.metrics import (
    corpus_sari,
    count_syllables,
    cwi_eval,
    fkgl,
    mean_length,
    sari,
    trace_stats,
)

GOLDEN = json.loads((Path(__file__).parent / "fixtures" / "sari_golden.json").read_text())
HAND_CASES = [(g["source"], g["output"], g["references"]) for g in GOLDEN]


@pytest.mark.parametrize("src, out, refs", HAND_CASES)
def test_sari_matches_bruteforce(src, out, refs):
    got = sari(src, out, refs)
    want = [float(x) for x in sari_bruteforce(src, out, refs)]
    assert [got.overall, got.add, got.keep, got.delete] == pytest.approx(want, abs=1e-12)


@pytest.mark.parametrize("g", GOLDEN)
def test_sari_matches_frozen_golden(g):
    got = sari(g["source"], g["output"], g["references"]).to_dict()
    assert got == pytest.approx({k: g[k] for k in got}, abs=1e-12)


def test_sari_frozen_small_case():
    r = sari("a b c d", "a b d", ["a b d"])
    assert (r.add, r.keep, r.delete) == pytest.approx((50.0, 50.0, 100.0), abs=1e-12)
    assert r.overall == pytest.approx(200 / 3, abs=1e-12)


def test_sari_perfect_match():
    assert sari("a b c d e f g h", "a b c d x y z w", ["a b c d x y z w"]).overall == 100.0


@pytest.mark.parametrize("src, refs", [(c[0], c[2]) for c in HAND_CASES])
def test_identity_output(src, refs):
    r = sari(src, src, refs)
    assert r.add == 0.0 and r.delete == 0.0
    assert abs(r.overall - r.keep / 3) < 1e-9


def test_identity_keep_thirds():
    assert round(62.20 / 3, 2) == 20.73
    assert round(36.72 / 3, 2) == 12.24


def test_sari_needs_references():
    with pytest.raises(ValidationError):
        sari("a b", "a", [])


sent = st.lists(st.sampled_from("a b c d e the cat".split()), min_size=1, max_size=9).map(" ".join)


@settings(max_examples=150, deadline=None)
@given(sent, sent, st.lists(sent, min_size=1, max_size=4), st.randoms(use_true_random=False))
def test_sari_properties(src, out, refs, rnd):
    r = sari(src, out, refs)
    assert abs(r.overall - (r.add + r.keep + r.delete) / 3) < 1e-9
    for v in (r.overall, r.add, r.keep, r.delete):
        assert 0.0 <= v <= 100.0
    want = [float(x) for x in sari_bruteforce(src, out, refs)]
    assert [r.overall, r.add, r.keep, r.delete] == pytest.approx(want, abs=1e-9)
    shuffled = list(refs)
    rnd.shuffle(shuffled)
    assert sari(src, out, shuffled).to_dict() == pytest.approx(r.to_dict(), abs=1e-12)


def test_corpus_sari_single_sentence_equals_sentence_sari():
    src, out, refs = HAND_CASES[5]
    pooled = corpus_sari([src], [out], [[r] for r in refs])
    assert pooled.to_dict() == pytest.approx(sari(src, out, refs).to_dict(), abs=1e-12)


def test_corpus_sari_alignment_checked():
    with pytest.raises(ValidationError):
        corpus_sari(["a", "b"], ["a"], [["a", "b"]])
    with pytest.raises(EmptyInputError):
        corpus_sari([], [], [[]])


@pytest.mark.parametrize("word, n", [
    ("cat", 1), ("happy", 2), ("rabbit", 2), ("table", 2), ("make", 1), ("jumped", 1),
    ("wanted", 2), ("the", 1), ("avalanche", 3), ("everest", 3), ("beautiful", 3),
    ("people", 2), ("25", 1), ("don't", 1), ("agreed", 2), ("kite", 1),
])
def test_syllables(word, n):
    assert count_syllables(word) == n


def test_fkgl_ten_words_twelve_syllables():
    corpus = ["the cat sat on the mat with a happy rabbit ."]
    assert fkgl(corpus) == pytest.approx(fkgl_direct(1, 10, 12), abs=1e-12)
    assert fkgl(corpus) == pytest.approx(2.47, abs=1e-9)
    assert mean_length(corpus) == 10


def test_fkgl_duplication_invariance():
    corpus = ["the dog barked .", "a substantial residence was purchased by numerous individuals ."]
    assert fkgl(corpus * 3) == pytest.approx(fkgl(corpus), abs=1e-12)


def test_fkgl_errors():
    with pytest.raises(EmptyInputError):
        fkgl([])
    with pytest.raises(ValidationError):
        fkgl([". ,"])


def test_cwi_examples():
    gold = [True, False, True, False]
    r = cwi_eval(gold, gold)
    assert r.accuracy == 100.0 and r.f1 == 100.0
    r = cwi_eval([False] * 4, gold)
    assert r.recall == 0.0 and r.f1 == 0.0
    with pytest.raises(ValidationError):
        cwi_eval([True], gold)
    with pytest.raises(EmptyInputError):
        cwi_eval([], [])


@given(st.lists(st.tuples(st.booleans(), st.booleans()), min_size=1, max_size=50))
def test_cwi_matches_confusion_oracle(pairs):
    pred, gold = [p for p, _ in pairs], [g for _, g in pairs]
    assert cwi_eval(pred, gold).to_dict() == pytest.approx(confusion(pred, gold), abs=1e-9)


def _trace(kinds):
    sb = ScoreBreakdown(0.5, 1.0, 1.0, True, True, 0.5)
    steps = tuple(Candidate(tokenize("w " * (i + 1)), k, ({"constraints": []},), sb)
                  for i, k in enumerate(kinds))
    return SimplificationTrace(tokenize("src"), sb, steps)


def test_trace_stats_hand_computed():
    s = trace_stats([_trace([EditKind.PARAPHRASE]),
                     _trace([EditKind.PARAPHRASE, EditKind.DELETE_REMOVAL])])
    assert (s.iterations, s.paraphrase, s.removal, s.extraction) == (1.5, 1.0, 0.5, 0.0)


def test_trace_stats_empty_traces():
    s = trace_stats([_trace([]), _trace([])])
    assert (s.iterations, s.paraphrase, s.removal, s.extraction) == (0.0, 0.0, 0.0, 0.0)
    with pytest.raises(EmptyInputError):
        trace_stats([])
