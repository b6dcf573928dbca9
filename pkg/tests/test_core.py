import json

import pytest
from hypothesis import given, strategies as st

from editsimp.core import (
    Candidate,
    EditKind,
    EngineConfig,
    ScoreBreakdown,
    Sentence,
    SimplificationTrace,
    detokenize,
    dump_config,
    load_config,
    parse_config,
    replay_trace,
    tokenize,
)
from editsimp.errors import ConfigError, EmptyInputError, ValidationError


@pytest.mark.parametrize("text, tokens", [
    ("The cat sat.", ["The", "cat", "sat", "."]),
    ("don't stop", ["don't", "stop"]),
    ('He said "hi," then left!', ["He", "said", '"', "hi", ",", '"', "then", "left", "!"]),
    ("(see above) ok", ["(", "see", "above", ")", "ok"]),
    ("wait ... what", ["wait", ".", ".", ".", "what"]),
    ("  spaced   out  ", ["spaced", "out"]),
])
def test_tokenize_examples(text, tokens):
    assert list(tokenize(text).tokens) == tokens


@pytest.mark.parametrize("text", ["", "   ", "\n\t"])
def test_tokenize_rejects_empty(text):
    with pytest.raises(EmptyInputError):
        tokenize(text)


def test_detokenize_attaches_punctuation():
    assert detokenize(["the", "dog", "(", "a", "puppy", ")", "barked", ",", "loudly", "."]) == \
        "the dog (a puppy) barked, loudly."


words = st.text(alphabet=st.characters(categories=("L", "N", "P"), max_codepoint=0x24F),
                min_size=1, max_size=8)


@given(st.lists(words, min_size=1, max_size=12))
def test_tokenize_idempotent(chunks):
    text = " ".join(chunks)
    first = tokenize(text)
    again = tokenize(" ".join(first.tokens))
    assert again.tokens == first.tokens


def test_sentence_text_round_trip():
    s = tokenize("the dog barked , loudly .")
    assert s.text == "the dog barked, loudly."
    assert tokenize(s.text).tokens == s.tokens
    assert s.key == "the dog barked , loudly ."


def test_config_defaults():
    c = EngineConfig()
    assert (c.t_par, c.t_dl_rm, c.t_dl_ex, c.mp_threshold, c.la_threshold, c.max_iterations) == \
        (0.8, 1.1, 1.25, 0.7, 0.3, 10)
    assert c.threshold_for(EditKind.PARAPHRASE) == 0.8
    assert c.threshold_for(EditKind.DELETE_REMOVAL) == 1.1
    assert c.threshold_for(EditKind.DELETE_EXTRACTION) == 1.25


def test_config_file_round_trip(tmp_path):
    path = tmp_path / "grs.conf"
    path.write_text("# sweep point\nt_dl_rm = 1.2\nmp_threshold = 0.5  # looser\n")
    c = load_config(path)
    assert c.t_dl_rm == 1.2 and c.mp_threshold == 0.5 and c.t_par == 0.8
    assert parse_config(dump_config(c)) == c


@pytest.mark.parametrize("text, key", [
    ("t_par = 0", "t_par"),
    ("t_par = -1", "t_par"),
    ("mp_threshold = nan", "mp_threshold"),
    ("max_iterations = 0", "max_iterations"),
    ("max_iterations = 2.5", "max_iterations"),
    ("beam = 4", "beam"),
    ("t_par = 0.8\nt_par = 0.9", "t_par"),
    ("la_threshold = high", "la_threshold"),
])
def test_config_errors_name_the_key(text, key):
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert info.value.key == key


def test_config_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "nope.conf")


def _score(total, simp=None):
    return ScoreBreakdown(simp if simp is not None else total, 0.9, 0.9, True, True, total)


def _trace(source_total, steps):
    src = tokenize("one two three four")
    cands = tuple(
        Candidate(Sentence.from_tokens(["w"] * (i + 1)), kind, ({"constraints": ["x"]},), _score(t))
        for i, (kind, t) in enumerate(steps)
    )
    return SimplificationTrace(src, _score(source_total), cands)


def test_replay_accepts_valid_chain():
    t = _trace(0.5, [(EditKind.PARAPHRASE, 0.45), (EditKind.DELETE_REMOVAL, 0.6)])
    # 0.45 > 0.5 * 0.8 = 0.4 and 0.6 > 0.45 * 1.1 = 0.495
    assert replay_trace(t, EngineConfig())


def test_replay_rejects_broken_chain():
    t = _trace(0.5, [(EditKind.DELETE_EXTRACTION, 0.6)])
    # 0.6 is not above 0.5 * 1.25
    assert not replay_trace(t, EngineConfig())


def test_trace_json_round_trip():
    t = _trace(0.5, [(EditKind.PARAPHRASE, 0.45), (EditKind.DELETE_REMOVAL, 0.6)])
    d = json.loads(t.to_json())
    assert d["iterations"] == 2 and d["final"] == "w w"
    assert [s["kind"] for s in d["steps"]] == ["PARAPHRASE", "DELETE_REMOVAL"]
    back = SimplificationTrace.from_dict(d)
    assert back.kinds() == t.kinds()
    assert [s.score for s in back.steps] == [s.score for s in t.steps]
    assert back.to_json() == t.to_json()


def test_trace_iteration_mismatch():
    d = json.loads(_trace(0.5, [(EditKind.PARAPHRASE, 0.45)]).to_json())
    d["iterations"] = 3
    with pytest.raises(ValidationError):
        SimplificationTrace.from_dict(d)


def test_empty_trace_final_is_source():
    t = _trace(0.5, [])
    assert t.final == t.source and t.iterations == 0


def test_candidate_needs_provenance():
    with pytest.raises(ValidationError):
        Candidate(tokenize("a b"), EditKind.PARAPHRASE, ())
