"""Backend contracts consumed by the engine.

Five components sit behind these protocols: the simplicity classifier (which
also exposes its second-layer [CLS] attention), the acceptability classifier,
the sentence embedder, the negatively-constrained paraphraser and the
constituency parser.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Protocol, runtime_checkable

import numpy as np

from ..core import Sentence
from ..errors import BackendError, ContractViolation


@dataclass(frozen=True, eq=False)
class AttentionTensor:
    """Attention paid by [CLS] to each content subtoken, one row per head.

    ``token_map[j]`` is the index of the word (in ``Sentence.tokens``) that
    subtoken ``j`` belongs to. Special tokens are not part of the tensor.
    """

    weights: np.ndarray
    token_map: tuple[int, ...]

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 2 or w.shape[0] < 1 or w.shape[1] < 1:
            raise ContractViolation(f"attention must be a non-empty H x N matrix, got shape {w.shape}")
        if not np.all(np.isfinite(w)) or w.min() < 0.0:
            raise ContractViolation("attention weights must be finite and non-negative")
        if len(self.token_map) != w.shape[1]:
            raise ContractViolation(
                f"token_map has {len(self.token_map)} entries for {w.shape[1]} subtokens"
            )
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "token_map", tuple(int(i) for i in self.token_map))

    @property
    def heads(self) -> int:
        return self.weights.shape[0]

    @property
    def n_tokens(self) -> int:
        return self.weights.shape[1]

    @classmethod
    def word_aligned(cls, weights) -> "AttentionTensor":
        """Tensor whose subtokens are exactly the sentence words."""
        w = np.asarray(weights, dtype=float)
        return cls(w, tuple(range(w.shape[-1])))


@dataclass(frozen=True)
class SimplicityJudgment:
    prob_simple: float
    attention: AttentionTensor


@dataclass(frozen=True, order=True)
class Constituent:
    depth: int
    start: int
    end: int
    label: str

    def __len__(self) -> int:
        return self.end - self.start

    def as_tuple(self) -> tuple[int, int, str, int]:
        return (self.start, self.end, self.label, self.depth)


@runtime_checkable
class SimplicityClassifier(Protocol):
    def classify_simplicity(self, s: Sentence) -> SimplicityJudgment: ...


@runtime_checkable
class AcceptabilityClassifier(Protocol):
    def classify_acceptability(self, s: Sentence) -> float: ...


@runtime_checkable
class Embedder(Protocol):
    def embed(self, s: Sentence) -> np.ndarray: ...


@runtime_checkable
class Paraphraser(Protocol):
    def paraphrase(self, s: Sentence, negative_constraints: frozenset[str]) -> Sentence: ...


@runtime_checkable
class ConstituencyParser(Protocol):
    def parse_constituents(self, s: Sentence) -> list[Constituent]: ...


def _require_tokens(s: Sentence):
    if not s.tokens:
        raise BackendError("empty sentence", sentence_id=s.id)


class _Guard:
    """Serializes calls into backends that declare ``thread_safe = False``."""

    def __init__(self, backend):
        self.lock = None if getattr(backend, "thread_safe", True) else threading.Lock()

    def __enter__(self):
        if self.lock is not None:
            self.lock.acquire()

    def __exit__(self, *exc):
        if self.lock is not None:
            self.lock.release()


class Backends:
    """The bundle of components handed to the engine.

    Results are memoized by token sequence (all backends are assumed to be
    referentially transparent) and contract checks are applied on the way
    out, so the rest of the engine can trust the values it receives.
    """

    def __init__(self, simplicity, acceptability, embedder, paraphraser, parser, name="custom"):
        self.simplicity = simplicity
        self.acceptability = acceptability
        self.embedder = embedder
        self.paraphraser = paraphraser
        self.parser = parser
        self.name = name
        self._guards = {k: _Guard(getattr(self, k)) for k in
                        ("simplicity", "acceptability", "embedder", "paraphraser", "parser")}
        self._cache: dict[tuple, object] = {}
        self._cache_lock = threading.Lock()

    def describe(self) -> dict:
        out = {"name": self.name}
        for k in ("simplicity", "acceptability", "embedder", "paraphraser", "parser"):
            b = getattr(self, k)
            out[k] = {
                "class": type(b).__name__,
                "version": getattr(b, "version", "unversioned"),
                "thread_safe": getattr(b, "thread_safe", True),
            }
        return out

    def _cached(self, kind, s: Sentence, fn, extra=()):
        key = (kind, s.tokens, extra)
        with self._cache_lock:
            if key in self._cache:
                return self._cache[key]
        _require_tokens(s)
        with self._guards[kind]:
            value = fn()
        with self._cache_lock:
            self._cache.setdefault(key, value)
        return value

    def classify_simplicity(self, s: Sentence) -> SimplicityJudgment:
        j = self._cached("simplicity", s, lambda: self.simplicity.classify_simplicity(s))
        if not 0.0 <= j.prob_simple <= 1.0:
            raise ContractViolation(f"simplicity probability {j.prob_simple} outside [0, 1]")
        if any(not 0 <= i < len(s.tokens) for i in j.attention.token_map):
            raise ContractViolation("attention token_map points outside the sentence")
        return j

    def classify_acceptability(self, s: Sentence) -> float:
        p = float(self._cached("acceptability", s, lambda: self.acceptability.classify_acceptability(s)))
        if not 0.0 <= p <= 1.0:
            raise ContractViolation(f"acceptability probability {p} outside [0, 1]")
        return p

    def embed(self, s: Sentence) -> np.ndarray:
        v = self._cached("embedder", s, lambda: np.asarray(self.embedder.embed(s), dtype=float))
        if v.ndim != 1 or not np.all(np.isfinite(v)):
            raise ContractViolation("embedding must be a finite 1-d vector")
        if not np.any(v):
            raise ContractViolation(f"zero embedding for sentence {s.text!r}")
        return v

    def paraphrase(self, s: Sentence, negative_constraints) -> Sentence:
        constraints = frozenset(negative_constraints)
        return self._cached("paraphraser", s,
                            lambda: self.paraphraser.paraphrase(s, constraints),
                            extra=tuple(sorted(constraints)))

    def parse_constituents(self, s: Sentence) -> list[Constituent]:
        spans = self._cached("parser", s, lambda: list(self.parser.parse_constituents(s)))
        check_well_nested(spans, len(s.tokens))
        return spans


def check_well_nested(spans, n_tokens: int) -> None:
    """Raise :class:`ContractViolation` unless spans form a proper tree over ``n_tokens``."""
    if not any(c.start == 0 and c.end == n_tokens for c in spans):
        raise ContractViolation("constituents do not include the whole-sentence span")
    for c in spans:
        if not 0 <= c.start < c.end <= n_tokens:
            raise ContractViolation(f"constituent {c} outside sentence of length {n_tokens}")
    ordered = sorted(spans, key=lambda c: (c.start, -c.end))
    stack: list[Constituent] = []
    for c in ordered:
        while stack and stack[-1].end <= c.start:
            stack.pop()
        if stack and c.end > stack[-1].end:
            raise ContractViolation(f"constituents {stack[-1]} and {c} cross")
        stack.append(c)
