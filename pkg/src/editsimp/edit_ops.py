"""Candidate generation: constrained paraphrasing and constituent deletion."""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

from .backends.base import Backends, Constituent
from .ccd import ComplexityMarking, detect
from .core import Candidate, EditKind, Sentence
from .errors import BackendError, UnsatisfiableConstraintError

log = logging.getLogger(__name__)

MIN_SPAN_TOKENS = 2
_SEPARATORS = frozenset(",;:")
_TERMINALS = frozenset(".!?")


class DeletionMode(str, enum.Enum):
    REMOVAL = "REMOVAL"
    EXTRACTION = "EXTRACTION"

    @property
    def kind(self) -> EditKind:
        return EditKind.DELETE_REMOVAL if self is DeletionMode.REMOVAL else EditKind.DELETE_EXTRACTION


@dataclass(frozen=True)
class DeletionCandidateSpec:
    span: tuple[int, int]
    mode: DeletionMode
    label: str
    depth: int

    def apply(self, tokens: tuple[str, ...]) -> tuple[str, ...]:
        start, end = self.span
        if self.mode is DeletionMode.EXTRACTION:
            return tokens[start:end]
        return repair(tokens[:start] + tokens[end:])

    def provenance(self) -> dict:
        return {"span": [self.span[0], self.span[1]], "label": self.label, "mode": self.mode.value}


def repair(tokens) -> tuple[str, ...]:
    """Clean up punctuation stranded by a removal.

    One pass, dropping only: separators (``, ; :``) at the start of the
    sentence, separators directly followed by another separator or by
    terminal punctuation, and separators at the very end.
    """
    toks = list(tokens)
    while toks and toks[0] in _SEPARATORS:
        toks.pop(0)
    out: list[str] = []
    for i, tok in enumerate(toks):
        nxt = toks[i + 1] if i + 1 < len(toks) else None
        if tok in _SEPARATORS and (nxt is None or nxt in _SEPARATORS or nxt in _TERMINALS):
            continue
        out.append(tok)
    return tuple(out)


def deletion_specs(spans: list[Constituent], n_tokens: int) -> list[DeletionCandidateSpec]:
    """Removal and extraction specs for every proper constituent, in search order."""
    specs = []
    for c in sorted(spans, key=lambda c: (c.depth, c.start, c.end, c.label)):
        if (c.start, c.end) == (0, n_tokens) or len(c) < MIN_SPAN_TOKENS:
            continue
        for mode in (DeletionMode.REMOVAL, DeletionMode.EXTRACTION):
            specs.append(DeletionCandidateSpec((c.start, c.end), mode, c.label, c.depth))
    return specs


def merge_duplicates(candidates: list[Candidate]) -> list[Candidate]:
    """Merge candidates with identical token sequences, keeping the first one's
    kind and position and the union of provenances."""
    merged: dict[tuple[str, ...], Candidate] = {}
    for cand in candidates:
        key = cand.sentence.tokens
        if key in merged:
            first = merged[key]
            merged[key] = Candidate(first.sentence, first.kind,
                                    first.provenance + cand.provenance, first.score, first.order)
        else:
            merged[key] = cand
    return list(merged.values())


def generate_deletion_candidates(s: Sentence, backends: Backends) -> list[Candidate]:
    try:
        spans = backends.parse_constituents(s)
    except BackendError as exc:
        log.info("skipping deletion for %r: %s", s.text, exc)
        return []
    out = []
    for rank, spec in enumerate(deletion_specs(spans, len(s.tokens))):
        tokens = spec.apply(s.tokens)
        if not tokens or tokens == s.tokens:
            continue
        out.append(Candidate(
            sentence=Sentence.from_tokens(tokens, id=s.id),
            kind=spec.mode.kind,
            provenance=(spec.provenance(),),
            order=(1, spec.depth, spec.span[0], rank),
        ))
    return merge_duplicates(out)


def generate_paraphrase_candidate(s: Sentence, backends: Backends,
                                  marking: ComplexityMarking | None = None) -> Candidate | None:
    """At most one paraphrase of ``s`` avoiding the detected complex words."""
    try:
        if marking is None:
            marking = detect(backends.classify_simplicity(s).attention, s)
        constraints = marking.constraint_words
        if not constraints:
            return None
        out = backends.paraphrase(s, constraints)
    except UnsatisfiableConstraintError as exc:
        log.debug("no paraphrase for %r: %s", s.text, exc)
        return None
    except BackendError as exc:
        log.warning("paraphraser failed on %r: %s", s.text, exc)
        return None
    if not out.tokens or out.tokens == s.tokens:
        return None
    leaked = constraints & set(out.lower_tokens())
    if leaked:
        log.warning("paraphraser emitted constrained words %s; candidate dropped", sorted(leaked))
        return None
    return Candidate(
        sentence=Sentence.from_tokens(out.tokens, id=s.id),
        kind=EditKind.PARAPHRASE,
        provenance=({"constraints": sorted(constraints)},),
        order=(0,),
    )
