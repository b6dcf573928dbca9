import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from oracles import ccd_scalar

from editsimp.backends.base import AttentionTensor
from editsimp.backends.mock import MockSimplicityClassifier
from editsimp.ccd import complex_word_predictions, detect
from editsimp.core import Sentence, tokenize
from editsimp.errors import ContractViolation


def _words(n):
    return Sentence.from_tokens([f"w{i}" for i in range(n)])


def test_two_token_example():
    m = detect(AttentionTensor.word_aligned([[0.8, 0.2]]), _words(2))
    assert m.threshold_T == 0.5
    assert m.flags == (True, False)


def test_two_head_example():
    A = [[0.1, 0.7, 0.2], [0.2, 0.6, 0.2]]
    m = detect(AttentionTensor.word_aligned(A), _words(3))
    assert m.token_scores == pytest.approx((0.3, 1.3, 0.4), abs=1e-12)
    assert m.threshold_T == pytest.approx(2 / 3, abs=1e-12)
    assert m.flags == (False, True, False)


def test_uniform_attention_flags_everything():
    for n in (1, 2, 7, 64):
        m = detect(AttentionTensor.word_aligned(np.full((4, n), 0.3)), _words(n))
        assert all(m.flags)


def test_useful_links_sentence():
    s = tokenize("below are some useful links to facilitate your involvement .")
    att = MockSimplicityClassifier(["facilitate"]).attention(s)
    m = detect(att, s)
    flagged = [t for t, f in zip(s.tokens, m.word_flags) if f]
    assert flagged == ["facilitate"]
    assert m.constraint_words == {"facilitate"}
    assert complex_word_predictions(m, s) == [t == "facilitate" for t in s.tokens]


def test_stopwords_and_punctuation_never_constrained():
    s = tokenize("the , of")
    m = detect(AttentionTensor.word_aligned(np.ones((2, 3))), s)
    assert all(m.word_flags)
    assert m.constraint_words == frozenset()


def test_subtokens_aggregate_to_words():
    # "unbelievable" split in two subtokens: word score is the sum of both
    att = AttentionTensor(np.array([[0.3, 0.3, 0.2]]), (0, 0, 1))
    s = Sentence.from_tokens(["unbelievable", "story"])
    m = detect(att, s)
    assert m.word_scores == pytest.approx((0.6, 0.2))
    assert m.word_flags == (True, False)
    assert m.constraint_words == {"unbelievable"}


def test_token_map_mismatch():
    with pytest.raises(ContractViolation):
        detect(AttentionTensor(np.ones((1, 3)), (0, 1, 5)), _words(3))


def test_ties_at_threshold_are_flagged():
    # the middle token sits exactly on the threshold (0.6 / 3)
    A = [[0.1, 0.2, 0.3]]
    m = detect(AttentionTensor.word_aligned(A), _words(3))
    assert m.flags == (False, True, True)


attention = st.integers(1, 6).flatmap(lambda h: st.integers(1, 12).flatmap(
    lambda n: arrays(np.float64, (h, n), elements=st.floats(0, 1, allow_subnormal=False))))


@settings(max_examples=200, deadline=None)
@given(attention)
def test_matches_scalar_oracle(A):
    if A.sum() == 0:
        A = A + 0.5
    m = detect(AttentionTensor.word_aligned(A), _words(A.shape[1]))
    T, scores, flags = ccd_scalar(A.tolist())
    assert m.threshold_T == pytest.approx(T, abs=1e-9)
    assert m.token_scores == pytest.approx(scores, abs=1e-9)
    # flags can only differ where the oracle's float sums sit on the threshold
    for mine, theirs, sc in zip(m.flags, flags, scores):
        assert mine == theirs or abs(sc - T) < 1e-9
    assert any(m.flags)


@settings(max_examples=100, deadline=None)
@given(attention, st.floats(1e-3, 1e3), st.randoms(use_true_random=False))
def test_scale_and_head_permutation_invariance(A, k, rnd):
    if A.sum() == 0:
        A = A + 0.5
    s = _words(A.shape[1])
    base = detect(AttentionTensor.word_aligned(A), s).flags
    perm = list(range(A.shape[0]))
    rnd.shuffle(perm)
    assert detect(AttentionTensor.word_aligned(A[perm]), s).flags == base
    scaled = detect(AttentionTensor.word_aligned(A * k), s).flags
    T, scores, _ = ccd_scalar(A.tolist())
    for a, b, sc in zip(scaled, base, scores):
        assert a == b or abs(sc - T) <= 1e-9 * max(T, 1.0)
