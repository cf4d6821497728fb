"""Multigraph (2k,k)-connectivity: checking, splitting-off, construction,
and optimal augmentation with min-max certificates."""

from ._conn2k import (
    AugmentationResult,
    BiSet,
    BlockingBiSet,
    CertificateFamily,
    ConstructionTrace,
    Edge,
    Extension,
    GenerateResult,
    MultiGraph,
    Obstacle,
    ParseError,
    PreconditionError,
    SplitOutcome,
    SplitTrace,
    UnsupportedKError,
    Verdict,
    augment,
    certificate_bruteforce,
    check,
    check_in_V,
    complete_splitting,
    decompose,
    entering_degree,
    f_value,
    generate,
    k_K3,
    local_edge_connectivity,
    minimal_extension,
    replay,
    split_pair,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "AugmentationResult",
    "BiSet",
    "BlockingBiSet",
    "CertificateFamily",
    "ConstructionTrace",
    "Edge",
    "Extension",
    "GenerateResult",
    "MultiGraph",
    "Obstacle",
    "ParseError",
    "PreconditionError",
    "SplitOutcome",
    "SplitTrace",
    "UnsupportedKError",
    "Verdict",
    "augment",
    "certificate_bruteforce",
    "check",
    "check_in_V",
    "complete_splitting",
    "decompose",
    "entering_degree",
    "f_value",
    "generate",
    "k_K3",
    "local_edge_connectivity",
    "minimal_extension",
    "replay",
    "split_pair",
    "verify_certificate",
]
