"""Random sentences with gold bracketed trees, for exercising the mock backends.

The vocabulary mixes plain words with words from the bundled mock lexicon,
some of which have synonym-table replacements and some of which do not, so
generated corpora trigger paraphrasing, unsatisfiable constraints, removals
and extractions in varying proportions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

DETERMINERS = ["the", "a", "this", "that"]
ADJECTIVES = ["big", "old", "new", "small", "red", "quiet", "massive", "substantial", "numerous"]
NOUNS = ["dog", "man", "city", "house", "team", "car", "river", "book", "village", "storm",
         "announcement", "residence", "individuals", "assistance", "objective", "sherpa"]
VERBS = ["saw", "made", "found", "helped", "visited", "reported", "opened", "closed", "moved",
         "purchased", "utilized", "demonstrated", "terminated"]
PARTICIPLES = ["burying", "leaving", "taking", "giving", "following"]
PREPOSITIONS = ["in", "on", "near", "with", "under", "after"]


@dataclass(frozen=True)
class SyntheticSentence:
    text: str
    tree: str


class _Builder:
    def __init__(self, rng: random.Random):
        self.rng = rng
        self.words: list[str] = []

    def leaf(self, options) -> str:
        w = self.rng.choice(options)
        self.words.append(w)
        return w

    def np(self, depth: int) -> str:
        parts = [self.leaf(DETERMINERS)]
        if self.rng.random() < 0.5:
            parts.append(self.leaf(ADJECTIVES))
        parts.append(self.leaf(NOUNS))
        inner = "(NP " + " ".join(parts) + ")"
        if depth < 2 and self.rng.random() < 0.35:
            return f"(NP {inner} {self.pp(depth + 1)})"
        return inner

    def pp(self, depth: int) -> str:
        p = self.leaf(PREPOSITIONS)
        return f"(PP {p} {self.np(depth)})"

    def vp(self) -> str:
        v = self.leaf(VERBS)
        out = f"(VP {v} {self.np(1)}"
        if self.rng.random() < 0.4:
            out += " " + self.pp(1)
        return out + ")"

    def participial(self) -> str:
        v = self.leaf(PARTICIPLES)
        out = f"(VP {v} {self.np(1)}"
        if self.rng.random() < 0.5:
            out += " " + self.pp(1)
        return f"(S {out}))"

    def sentence(self) -> str:
        parts = [self.np(0), self.vp()]
        if self.rng.random() < 0.45:
            self.words.append(",")
            parts.append("(, ,)")
            parts.append(self.participial())
        self.words.append(".")
        parts.append("(. .)")
        return "(S " + " ".join(parts) + ")"


def random_sentence(rng: random.Random) -> SyntheticSentence:
    b = _Builder(rng)
    tree = b.sentence()
    return SyntheticSentence(" ".join(b.words), tree)


def random_corpus(n: int, seed: int = 0) -> list[SyntheticSentence]:
    rng = random.Random(seed)
    return [random_sentence(rng) for _ in range(n)]
