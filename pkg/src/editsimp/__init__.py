"""Iterative, edit-based sentence simplification."""

__version__ = "0.1.0"

from .backends import AttentionTensor, Backends, mock_backends
from .ccd import ComplexityMarking, detect
from .core import (
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
from .metrics import SariResult, corpus_sari, cwi_eval, fkgl, sari, trace_stats
from .scoring import ScoringContext, score
from .search import simplify, simplify_corpus

__all__ = [
    "AttentionTensor", "Backends", "Candidate", "ComplexityMarking", "EditKind", "EngineConfig",
    "SariResult", "ScoreBreakdown", "ScoringContext", "Sentence", "SimplificationTrace",
    "corpus_sari", "cwi_eval", "detect", "detokenize", "dump_config", "fkgl", "load_config",
    "mock_backends", "parse_config", "replay_trace", "sari", "score", "simplify",
    "simplify_corpus", "tokenize", "trace_stats",
]
