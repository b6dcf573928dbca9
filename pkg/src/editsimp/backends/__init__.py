from .base import (
    AcceptabilityClassifier,
    AttentionTensor,
    Backends,
    ConstituencyParser,
    Constituent,
    Embedder,
    Paraphraser,
    SimplicityClassifier,
    SimplicityJudgment,
    check_well_nested,
)
from .mock import mock_backends

__all__ = [
    "AcceptabilityClassifier",
    "AttentionTensor",
    "Backends",
    "ConstituencyParser",
    "Constituent",
    "Embedder",
    "Paraphraser",
    "SimplicityClassifier",
    "SimplicityJudgment",
    "check_well_nested",
    "mock_backends",
]
