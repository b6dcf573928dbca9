"""Deterministic, model-free backends.

These are what the test suite and the demos run on. Every behaviour is a
closed-form rule, so expected values can be computed by hand:

* simplicity: ``0.9 * 0.5 ** hits`` where ``hits`` counts lexicon tokens;
* attention: per head, word ``i`` gets raw weight ``base_i * (1 + 0.1 *
  ((i + h) % 3))`` with base 10 for lexicon words, 0.5 for stopwords, 0.25 for
  punctuation and 1 otherwise; rows are scaled to sum to ``1 - special_mass``
  (the share notionally held by [CLS]/[SEP]);
* acceptability: 0.9 if any token is a known verb form, else 0.1;
* embedding: hashed bag of words, with synonym-table replacements mapped back
  to the word they replace;
* paraphrase: replace each constrained word by its synonym-table entry;
* parsing: bracketed trees registered per sentence, projected onto edited
  versions of that sentence.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from ..core import STOPWORDS, Sentence, is_punct, split_tokens
from ..errors import BackendError, UnsatisfiableConstraintError
from .base import AttentionTensor, Backends, Constituent, SimplicityJudgment
from .trees import project, read_bracketed

VERSION = "mock-1"


def read_wordlist(path) -> list[str]:
    """One lowercase word per line; blank lines and ``#`` comments skipped."""
    words = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.append(line.lower())
    return words


def read_synonyms(path) -> dict[str, str]:
    table = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise ValueError(f"{path}:{lineno}: expected 'word<TAB>replacement'")
        table.setdefault(parts[0].strip().lower(), parts[1].strip())
    return table


def _data_file(name: str) -> Path:
    return Path(str(resources.files("editsimp") / "data" / name))


def default_lexicon() -> list[str]:
    return read_wordlist(_data_file("lexicon.txt"))


def default_synonyms() -> dict[str, str]:
    return read_synonyms(_data_file("synonyms.tsv"))


def default_verbs() -> list[str]:
    return read_wordlist(_data_file("verbs.txt"))


class _Canonicalizer:
    """Maps a synonym-table replacement back onto the word it replaces."""

    def __init__(self, synonyms: Mapping[str, str]):
        self.inverse: dict[str, str] = {}
        for word, repl in synonyms.items():
            self.inverse.setdefault(repl.lower(), word)

    def __call__(self, token: str) -> str:
        low = token.lower()
        return self.inverse.get(low, low)


class MockSimplicityClassifier:
    version = VERSION
    thread_safe = True

    def __init__(self, lexicon: Iterable[str], heads: int = 3, special_mass: float = 0.2):
        if heads < 1:
            raise ValueError("heads must be >= 1")
        if not 0.0 <= special_mass < 1.0:
            raise ValueError("special_mass must lie in [0, 1)")
        self.lexicon = frozenset(w.lower() for w in lexicon)
        self.heads = heads
        self.special_mass = special_mass

    def hits(self, s: Sentence) -> int:
        return sum(t.lower() in self.lexicon for t in s.tokens)

    def base_weight(self, token: str) -> float:
        low = token.lower()
        if low in self.lexicon:
            return 10.0
        if is_punct(token):
            return 0.25
        if low in STOPWORDS:
            return 0.5
        return 1.0

    def attention(self, s: Sentence) -> AttentionTensor:
        n = len(s.tokens)
        base = np.array([self.base_weight(t) for t in s.tokens])
        shift = (np.arange(n)[None, :] + np.arange(self.heads)[:, None]) % 3
        raw = base[None, :] * (1.0 + 0.1 * shift)
        weights = raw / raw.sum(axis=1, keepdims=True) * (1.0 - self.special_mass)
        return AttentionTensor(weights, tuple(range(n)))

    def classify_simplicity(self, s: Sentence) -> SimplicityJudgment:
        if not s.tokens:
            raise BackendError("empty sentence", sentence_id=s.id)
        return SimplicityJudgment(0.9 * 0.5 ** self.hits(s), self.attention(s))


class MockAcceptabilityClassifier:
    version = VERSION
    thread_safe = True

    def __init__(self, verbs: Iterable[str]):
        self.verbs = frozenset(v.lower() for v in verbs)

    def classify_acceptability(self, s: Sentence) -> float:
        if not s.tokens:
            raise BackendError("empty sentence", sentence_id=s.id)
        return 0.9 if any(t.lower() in self.verbs for t in s.tokens) else 0.1


class HashingEmbedder:
    """Bag-of-words counts hashed into ``dim`` buckets (blake2b, unsigned)."""

    version = VERSION
    thread_safe = True

    def __init__(self, dim: int = 4096, synonyms: Mapping[str, str] | None = None):
        self.dim = dim
        self.canon = _Canonicalizer(synonyms or {})

    def bucket(self, word: str) -> int:
        digest = hashlib.blake2b(word.encode("utf-8"), digest_size=8).digest()
        return int.from_bytes(digest, "little") % self.dim

    def bag(self, s: Sentence) -> Counter:
        return Counter(self.canon(t) for t in s.tokens)

    def embed(self, s: Sentence) -> np.ndarray:
        if not s.tokens:
            raise BackendError("empty sentence", sentence_id=s.id)
        v = np.zeros(self.dim)
        for word, count in self.bag(s).items():
            v[self.bucket(word)] += count
        return v


class TableParaphraser:
    """Negative-constrained "decoding" by synonym-table substitution.

    Every token whose lowercase form is constrained is replaced by its table
    entry. If some constrained word has no entry, or the entry is itself
    constrained, no output can satisfy the constraints.
    """

    version = VERSION
    thread_safe = True

    def __init__(self, synonyms: Mapping[str, str]):
        self.synonyms = {k.lower(): v for k, v in synonyms.items()}

    def paraphrase(self, s: Sentence, negative_constraints) -> Sentence:
        constraints = {c.lower() for c in negative_constraints}
        out: list[str] = []
        for tok in s.tokens:
            low = tok.lower()
            if low not in constraints:
                out.append(tok)
                continue
            repl = self.synonyms.get(low)
            if repl is None:
                raise UnsatisfiableConstraintError(
                    f"no replacement for constrained word {low!r}", sentence_id=s.id)
            repl_tokens = split_tokens(repl)
            if any(r.lower() in constraints for r in repl_tokens):
                raise UnsatisfiableConstraintError(
                    f"replacement for {low!r} is itself constrained", sentence_id=s.id)
            if tok[:1].isupper():
                repl_tokens[0] = repl_tokens[0][:1].upper() + repl_tokens[0][1:]
            out.extend(repl_tokens)
        return Sentence.from_tokens(out, id=s.id)


class BracketParser:
    """Reads registered Penn-style trees and projects them onto edited sentences.

    A sentence with its own registered tree is parsed from it directly. Any
    other sentence is aligned against the registered trees (after mapping
    synonym replacements back to their originals) and the best-aligned tree,
    pruned to the surviving leaves, is used. Sentences no tree can explain
    raise :class:`BackendError`.
    """

    version = VERSION
    thread_safe = True

    def __init__(self, trees: Mapping[str, str] | None = None,
                 synonyms: Mapping[str, str] | None = None):
        self.canon = _Canonicalizer(synonyms or {})
        self._trees: list[tuple[tuple[str, ...], object, list[str], Counter]] = []
        self._by_key: dict[tuple[str, ...], int] = {}
        for text, bracketed in (trees or {}).items():
            self.register(text, bracketed)

    def register(self, text: "str | Sentence", bracketed: str) -> None:
        tokens = text.tokens if isinstance(text, Sentence) else tuple(split_tokens(text))
        root, leaves = read_bracketed(bracketed)
        key = tuple(self.canon(t) for t in tokens)
        leaf_counts = Counter(self.canon(leaf) for leaf in leaves)
        self._by_key.setdefault(key, len(self._trees))
        self._trees.append((key, root, leaves, leaf_counts))

    def parse_constituents(self, s: Sentence) -> list[Constituent]:
        if not s.tokens:
            raise BackendError("empty sentence", sentence_id=s.id)
        key = tuple(self.canon(t) for t in s.tokens)
        order = list(range(len(self._trees)))
        if key in self._by_key:
            first = self._by_key[key]
            order.remove(first)
            order.insert(0, first)
        needed = Counter(w for w in key if not is_punct(w))
        for i in order:
            _, root, leaves, leaf_counts = self._trees[i]
            if needed - leaf_counts:
                continue
            spans = project(root, leaves, s.tokens, canon=self.canon)
            if spans is not None:
                return spans
        raise BackendError(f"no registered tree covers {s.text!r}", sentence_id=s.id)


def mock_backends(lexicon: Iterable[str] | None = None,
                  synonyms: Mapping[str, str] | None = None,
                  verbs: Iterable[str] | None = None,
                  trees: Mapping[str, str] | None = None,
                  heads: int = 3,
                  dim: int = 4096) -> Backends:
    """Assemble the five mock components; ``None`` selects the bundled data."""
    lexicon = default_lexicon() if lexicon is None else list(lexicon)
    synonyms = default_synonyms() if synonyms is None else dict(synonyms)
    verbs = default_verbs() if verbs is None else list(verbs)
    return Backends(
        simplicity=MockSimplicityClassifier(lexicon, heads=heads),
        acceptability=MockAcceptabilityClassifier(verbs),
        embedder=HashingEmbedder(dim=dim, synonyms=synonyms),
        paraphraser=TableParaphraser(synonyms),
        parser=BracketParser(trees, synonyms=synonyms),
        name="mock",
    )
