"""Domain types, configuration and the engine-wide tokenizer.

Tokenization rules (used for search, deletion spans and every metric):

* split on whitespace;
* peel leading ``( [ { " ' ``` characters and trailing
  ``. , ; : ! ? ) ] } " ' ``` characters off each chunk, one token per
  character;
* a chunk made only of punctuation becomes one token per character;
* everything left in the middle is a single token, so contractions such as
  ``don't`` and ``it's`` stay intact.
"""

from __future__ import annotations

import enum
import functools
import json
import math
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from .errors import ConfigError, EmptyInputError, ValidationError

LEADING_PUNCT = frozenset("([{\"'`")
TRAILING_PUNCT = frozenset(".,;:!?)]}\"'`")
# function words never used as negative constraints
STOPWORDS = frozenset("""
a an the and or but nor so yet for of in on at by to from with without into onto
upon over under about above below after before between through during against
among within across along around behind beyond near off out up down than then
as if because while when where which who whom whose what that this these those
there here it its it's he him his she her hers they them their theirs we us our
ours you your yours i me my mine is am are was were be been being has have had
do does did will would shall should can could may might must not no yes all any
some each every both either neither such very too also just only own same other
""".split())

# detokenizer attachment sets
_CLOSERS = frozenset(".,;:!?)]}")
_OPENERS = frozenset("([{")


def _split_chunk(chunk: str) -> list[str]:
    if all(not ch.isalnum() for ch in chunk):
        return list(chunk)
    start, end = 0, len(chunk)
    while start < end and chunk[start] in LEADING_PUNCT:
        start += 1
    while end > start and chunk[end - 1] in TRAILING_PUNCT:
        end -= 1
    return list(chunk[:start]) + [chunk[start:end]] + list(chunk[end:])


def split_tokens(text: str) -> list[str]:
    out: list[str] = []
    for chunk in text.split():
        out.extend(_split_chunk(chunk))
    return out


def detokenize(tokens: Sequence[str]) -> str:
    """Join tokens into a surface string.

    Closing punctuation attaches to the previous token and opening brackets to
    the next one; everything else is separated by a single space.
    """
    parts: list[str] = []
    glue_next = False
    for tok in tokens:
        if parts and not glue_next and tok not in _CLOSERS:
            parts.append(" ")
        parts.append(tok)
        glue_next = tok in _OPENERS
    return "".join(parts)


@functools.lru_cache(maxsize=65536)
def is_punct(token: str) -> bool:
    return not any(ch.isalnum() for ch in token)


@dataclass(frozen=True)
class Sentence:
    surface: str
    tokens: tuple[str, ...]
    id: str = ""

    @classmethod
    def from_tokens(cls, tokens: Iterable[str], id: str = "") -> "Sentence":
        toks = tuple(tokens)
        return cls(surface=detokenize(toks), tokens=toks, id=id)

    @property
    def key(self) -> str:
        """Whitespace-joined tokens; identity of a sentence inside the search."""
        return " ".join(self.tokens)

    @property
    def text(self) -> str:
        return detokenize(self.tokens)

    def lower_tokens(self) -> tuple[str, ...]:
        return tuple(t.lower() for t in self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


def tokenize(surface: str, id: str = "") -> Sentence:
    """Tokenize ``surface`` into a :class:`Sentence`.

    >>> tokenize("He ran.").tokens
    ('He', 'ran', '.')
    """
    if surface is None or not surface.strip():
        raise EmptyInputError("cannot tokenize empty or whitespace-only input")
    stripped = surface.strip()
    return Sentence(surface=stripped, tokens=tuple(split_tokens(stripped)), id=id)


def as_sentence(value: "Sentence | str", id: str = "") -> Sentence:
    if isinstance(value, Sentence):
        if not value.tokens:
            raise EmptyInputError("sentence has no tokens")
        return value
    return tokenize(value, id=id)


class EditKind(str, enum.Enum):
    PARAPHRASE = "PARAPHRASE"
    DELETE_REMOVAL = "DELETE_REMOVAL"
    DELETE_EXTRACTION = "DELETE_EXTRACTION"

    @property
    def is_deletion(self) -> bool:
        return self is not EditKind.PARAPHRASE


@dataclass(frozen=True)
class ScoreBreakdown:
    simplicity: float
    meaning_sim: float
    acceptability: float
    mp_pass: bool
    la_pass: bool
    total: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "simplicity": self.simplicity,
            "meaning_sim": self.meaning_sim,
            "acceptability": self.acceptability,
            "mp_pass": self.mp_pass,
            "la_pass": self.la_pass,
            "total": self.total,
        }

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "ScoreBreakdown":
        return cls(
            simplicity=float(d["simplicity"]),
            meaning_sim=float(d["meaning_sim"]),
            acceptability=float(d["acceptability"]),
            mp_pass=bool(d["mp_pass"]),
            la_pass=bool(d["la_pass"]),
            total=float(d["total"]),
        )


@dataclass(frozen=True)
class Candidate:
    """A proposed revision.

    ``provenance`` is a tuple of plain dicts: ``{"constraints": [...]}`` for a
    paraphrase, ``{"span": [start, end], "label": ..., "mode": ...}`` for a
    deletion. Several entries mean several edits produced the same text.
    ``score`` stays ``None`` until the candidate has been scored.
    """

    sentence: Sentence
    kind: EditKind
    provenance: tuple[Mapping[str, Any], ...]
    score: ScoreBreakdown | None = None
    order: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if not self.provenance:
            raise ValidationError("candidate provenance must not be empty")

    def with_score(self, score: ScoreBreakdown) -> "Candidate":
        return replace(self, score=score)


@dataclass(frozen=True)
class EngineConfig:
    t_par: float = 0.8
    t_dl_rm: float = 1.1
    t_dl_ex: float = 1.25
    mp_threshold: float = 0.7
    la_threshold: float = 0.3
    max_iterations: int = 10

    def __post_init__(self):
        for name in ("t_par", "t_dl_rm", "t_dl_ex", "mp_threshold", "la_threshold"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or not math.isfinite(value) or value <= 0:
                raise ConfigError(f"{name} must be a positive number, got {value!r}", key=name)
        if isinstance(self.max_iterations, bool) or not isinstance(self.max_iterations, int) \
                or self.max_iterations < 1:
            raise ConfigError(
                f"max_iterations must be an integer >= 1, got {self.max_iterations!r}",
                key="max_iterations",
            )

    def threshold_for(self, kind: EditKind) -> float:
        if kind is EditKind.PARAPHRASE:
            return self.t_par
        if kind is EditKind.DELETE_REMOVAL:
            return self.t_dl_rm
        return self.t_dl_ex

    def to_dict(self) -> dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


CONFIG_KEYS = tuple(f.name for f in fields(EngineConfig))


def parse_config(text: str) -> EngineConfig:
    """Parse flat ``key = value`` text; ``#`` starts a comment."""
    values: dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in CONFIG_KEYS:
            raise ConfigError(f"line {lineno}: unknown config key {key!r}", key=key)
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate config key {key!r}", key=key)
        try:
            values[key] = int(value) if key == "max_iterations" else float(value)
        except ValueError:
            raise ConfigError(f"line {lineno}: cannot parse value {value!r} for {key}", key=key) from None
    return EngineConfig(**values)


def load_config(path: str | Path) -> EngineConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return parse_config(text)


def dump_config(config: EngineConfig) -> str:
    return "".join(f"{k} = {v!r}\n" for k, v in config.to_dict().items())


@dataclass(frozen=True)
class SimplificationTrace:
    source: Sentence
    source_score: ScoreBreakdown
    steps: tuple[Candidate, ...] = ()
    status: str = "converged"

    @property
    def final(self) -> Sentence:
        return self.steps[-1].sentence if self.steps else self.source

    @property
    def iterations(self) -> int:
        return len(self.steps)

    def kinds(self) -> list[EditKind]:
        return [c.kind for c in self.steps]

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.source.id,
            "source": self.source.text,
            "source_scores": self.source_score.to_dict(),
            "steps": [
                {
                    "text": c.sentence.text,
                    "kind": c.kind.value,
                    "provenance": [dict(p) for p in c.provenance],
                    "scores": c.score.to_dict(),
                }
                for c in self.steps
            ],
            "final": self.final.text,
            "iterations": self.iterations,
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: Mapping[str, Any]) -> "SimplificationTrace":
        sid = str(d.get("id", ""))
        steps = tuple(
            Candidate(
                sentence=tokenize(s["text"], id=sid),
                kind=EditKind(s["kind"]),
                provenance=tuple(s["provenance"]),
                score=ScoreBreakdown.from_dict(s["scores"]),
            )
            for s in d["steps"]
        )
        trace = cls(
            source=tokenize(d["source"], id=sid),
            source_score=ScoreBreakdown.from_dict(d["source_scores"]),
            steps=steps,
            status=d.get("status", "converged"),
        )
        if trace.iterations != d.get("iterations", trace.iterations):
            raise ValidationError("trace iteration count does not match its steps")
        return trace


def replay_trace(trace: SimplificationTrace, config: EngineConfig) -> bool:
    """Re-check the acceptance gate for every recorded step."""
    prev = trace.source_score.total
    for step in trace.steps:
        if step.score is None:
            return False
        if not step.score.total > prev * config.threshold_for(step.kind):
            return False
        prev = step.score.total
    return len(trace.steps) <= config.max_iterations
