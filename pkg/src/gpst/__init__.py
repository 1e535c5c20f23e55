"""Perfect state transfer for Grover walks on circulant graphs."""

from __future__ import annotations

from .classifier import ClassificationRefused, classify, nonintegrality_witness, verify_classification
from .graph_core import CirculantSpec, Graph, build_circulant, build_walk_matrices, vertex_type_state
from .pst_engine import InconsistencyError, PSTVerdict, pst_criterion_B, pst_criterion_C, search_min_pst
from .spectral import decompose, decompose_circulant
from .walk_sim import evolve, fidelity_trace

__all__ = [
    "CirculantSpec",
    "ClassificationRefused",
    "Graph",
    "InconsistencyError",
    "PSTVerdict",
    "build_circulant",
    "build_walk_matrices",
    "classify",
    "decompose",
    "decompose_circulant",
    "evolve",
    "fidelity_trace",
    "nonintegrality_witness",
    "pst_criterion_B",
    "pst_criterion_C",
    "search_min_pst",
    "verify_classification",
    "vertex_type_state",
]
