"""Evaluation metrics: SARI, FKGL, CWI tagging scores and trace statistics."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .core import EditKind, Sentence, SimplificationTrace, as_sentence, is_punct
from .errors import EmptyInputError, ValidationError

NGRAM_ORDER = 4


@dataclass(frozen=True)
class SariResult:
    overall: float
    add: float
    keep: float
    delete: float

    def to_dict(self) -> dict:
        return {"sari": self.overall, "add": self.add, "keep": self.keep, "delete": self.delete}


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def _scale(counter: Counter, k: int) -> Counter:
    return Counter({g: c * k for g, c in counter.items()})


class _SariStats:
    """Corpus-level accumulators, one slot per n-gram order."""

    FIELDS = ("add_sys_correct", "add_sys_total", "add_ref_total",
              "keep_sys_correct", "keep_ref_correct", "keep_sys_total", "keep_ref_total",
              "del_sys_correct", "del_sys_total")

    def __init__(self):
        for name in self.FIELDS:
            setattr(self, name, [0.0] * NGRAM_ORDER)

    def update(self, src: Sequence[str], out: Sequence[str], refs: Sequence[Sequence[str]]):
        num_refs = len(refs)
        for n in range(1, NGRAM_ORDER + 1):
            k = n - 1
            s_grams = _ngrams(src, n)
            o_grams = _ngrams(out, n)
            r_all = Counter()
            for r in refs:
                r_all.update(_ngrams(r, n))

            # additions are binary: an n-gram either appears or not
            added = set(o_grams) - set(s_grams)
            ref_added = set(r_all) - set(s_grams)
            self.add_sys_total[k] += len(added)
            self.add_ref_total[k] += len(ref_added)
            self.add_sys_correct[k] += len(added & ref_added)

            # keep/delete counts are weighted by reference agreement
            s_rep = _scale(s_grams, num_refs)
            o_rep = _scale(o_grams, num_refs)
            kept = s_rep & o_rep
            kept_good = kept & r_all
            kept_by_refs = s_rep & r_all
            self.keep_sys_total[k] += len(kept)
            self.keep_ref_total[k] += len(kept_by_refs)
            self.keep_sys_correct[k] += sum(kept_good[g] / kept[g] for g in kept_good)
            self.keep_ref_correct[k] += sum(kept_good[g] / kept_by_refs[g] for g in kept_good)

            deleted = s_rep - o_rep
            deleted_good = deleted - r_all
            self.del_sys_total[k] += len(deleted)
            self.del_sys_correct[k] += sum(deleted_good[g] / deleted[g] for g in deleted_good)

    def result(self) -> SariResult:
        add = keep = delete = 0.0
        for k in range(NGRAM_ORDER):
            add += _f1(_ratio(self.add_sys_correct[k], self.add_sys_total[k]),
                       _ratio(self.add_sys_correct[k], self.add_ref_total[k]))
            keep += _f1(_ratio(self.keep_sys_correct[k], self.keep_sys_total[k]),
                        _ratio(self.keep_ref_correct[k], self.keep_ref_total[k]))
            delete += _ratio(self.del_sys_correct[k], self.del_sys_total[k])
        add, keep, delete = (100.0 * x / NGRAM_ORDER for x in (add, keep, delete))
        return SariResult(overall=(add + keep + delete) / 3.0, add=add, keep=keep, delete=delete)


def _ratio(num: float, den: float) -> float:
    return num / den if den > 0 else 0.0


def _f1(p: float, r: float) -> float:
    return 2 * p * r / (p + r) if p > 0 or r > 0 else 0.0


def _sari_tokens(s) -> list[str]:
    return [t.lower() for t in as_sentence(s).tokens]


def sari(source, output, references) -> SariResult:
    """Sentence-level SARI (add and keep by F1, delete by precision; 0-100 scale)."""
    if not references:
        raise ValidationError("SARI needs at least one reference")
    stats = _SariStats()
    stats.update(_sari_tokens(source), _sari_tokens(output), [_sari_tokens(r) for r in references])
    return stats.result()


def corpus_sari(sources, outputs, references) -> SariResult:
    """Corpus SARI with statistics pooled over sentences before the F1/precision step.

    ``references`` holds one list per reference set, each aligned with
    ``sources`` (the layout of multi-reference test sets such as ASSET).
    """
    sources, outputs = list(sources), list(outputs)
    ref_sets = [list(r) for r in references]
    if not ref_sets:
        raise ValidationError("SARI needs at least one reference set")
    if len(sources) != len(outputs) or any(len(r) != len(sources) for r in ref_sets):
        raise ValidationError("sources, outputs and every reference set must be aligned")
    if not sources:
        raise EmptyInputError("empty corpus")
    stats = _SariStats()
    for i, (src, out) in enumerate(zip(sources, outputs)):
        stats.update(_sari_tokens(src), _sari_tokens(out), [_sari_tokens(r[i]) for r in ref_sets])
    return stats.result()


# syllable heuristic -------------------------------------------------------

_SYLLABLE_EXCEPTIONS = {
    "the": 1, "every": 3, "everyone": 4, "business": 2, "people": 2, "area": 3,
    "idea": 3, "being": 2, "create": 2, "created": 3, "poem": 2, "science": 2,
    "quiet": 2, "real": 1, "really": 2, "one": 1, "once": 1, "are": 1, "were": 1,
    "there": 1, "where": 1, "here": 1, "whole": 1, "some": 1, "come": 1, "done": 1,
    "gone": 1, "none": 1, "give": 1, "live": 1, "have": 1, "love": 1, "move": 1,
    "lose": 1, "whose": 1, "sure": 1, "fire": 1, "hour": 1, "our": 1,
}
_VOWEL_GROUP = re.compile(r"[aeiouy]+")


def count_syllables(word: str) -> int:
    """Vowel-group syllable estimate.

    Rules, in order: exception table; one syllable per group of consecutive
    ``aeiouy``; a final silent ``e`` is dropped unless the word ends in
    consonant + ``le``; a final ``ed`` is silent unless preceded by ``t``/``d``;
    never less than one. Tokens without letters count as one syllable.
    """
    w = "".join(ch for ch in word.lower() if ch.isalpha())
    if not w:
        return 1
    if w in _SYLLABLE_EXCEPTIONS:
        return _SYLLABLE_EXCEPTIONS[w]
    count = len(_VOWEL_GROUP.findall(w))
    if w.endswith("e") and not w.endswith(("ee", "ie", "ye")) and count > 1:
        if not (w.endswith("le") and len(w) > 2 and w[-3] not in "aeiouy"):
            count -= 1
    elif w.endswith("ed") and len(w) > 3 and w[-3] not in "td" and count > 1 \
            and w[-3] not in "aeiouy":
        count -= 1
    return max(1, count)


def words(s) -> list[str]:
    """Tokens that count as words for readability: anything with an alphanumeric."""
    return [t for t in as_sentence(s).tokens if not is_punct(t)]


def fkgl(corpus) -> float:
    """Flesch-Kincaid grade level of a corpus of sentences."""
    corpus = list(corpus)
    if not corpus:
        raise EmptyInputError("FKGL needs at least one sentence")
    n_words = n_syll = 0
    for s in corpus:
        ws = words(s)
        n_words += len(ws)
        n_syll += sum(count_syllables(w) for w in ws)
    if n_words == 0:
        raise ValidationError("FKGL corpus contains no words")
    return 0.39 * (n_words / len(corpus)) + 11.8 * (n_syll / n_words) - 15.59


def mean_length(corpus) -> float:
    corpus = list(corpus)
    if not corpus:
        raise EmptyInputError("empty corpus")
    return sum(len(words(s)) for s in corpus) / len(corpus)


# complex word identification ---------------------------------------------

@dataclass(frozen=True)
class CwiResult:
    accuracy: float
    precision: float
    recall: float
    f1: float

    def to_dict(self) -> dict:
        return {"accuracy": self.accuracy, "precision": self.precision,
                "recall": self.recall, "f1": self.f1}


def cwi_eval(predictions: Sequence[bool], gold: Sequence[bool]) -> CwiResult:
    """Binary tagging scores (0-100) with "complex" as the positive class."""
    if len(predictions) != len(gold):
        raise ValidationError(f"{len(predictions)} predictions for {len(gold)} gold tags")
    if not gold:
        raise EmptyInputError("no tags to evaluate")
    tp = sum(1 for p, g in zip(predictions, gold) if p and g)
    fp = sum(1 for p, g in zip(predictions, gold) if p and not g)
    fn = sum(1 for p, g in zip(predictions, gold) if g and not p)
    tn = len(gold) - tp - fp - fn
    precision = _ratio(tp, tp + fp)
    recall = _ratio(tp, tp + fn)
    return CwiResult(
        accuracy=100.0 * (tp + tn) / len(gold),
        precision=100.0 * precision,
        recall=100.0 * recall,
        f1=100.0 * _f1(precision, recall),
    )


# trace aggregation --------------------------------------------------------

@dataclass(frozen=True)
class TraceStats:
    sentences: int
    iterations: float
    paraphrase: float
    removal: float
    extraction: float

    def to_dict(self) -> dict:
        return {"sentences": self.sentences, "iterations": self.iterations, "PA": self.paraphrase,
                "RM": self.removal, "EX": self.extraction}


def trace_stats(traces: Sequence[SimplificationTrace]) -> TraceStats:
    """Mean iterations per sentence and mean number of steps of each kind."""
    traces = list(traces)
    if not traces:
        raise EmptyInputError("no traces")
    counts = Counter(kind for t in traces for kind in t.kinds())
    n = len(traces)
    return TraceStats(
        sentences=n,
        iterations=sum(t.iterations for t in traces) / n,
        paraphrase=counts[EditKind.PARAPHRASE] / n,
        removal=counts[EditKind.DELETE_REMOVAL] / n,
        extraction=counts[EditKind.DELETE_EXTRACTION] / n,
    )
