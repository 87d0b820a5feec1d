"""Coloring algorithms, density classes and exact oracles for linear hypergraphs."""

from .classify import (
    DensityClass,
    DensityReport,
    Lemma2Report,
    density_report,
    is_linear,
    is_uniform,
    lemma1_bound_holds,
    lemma2_report,
)
from .coloring import (
    PartitionClasses,
    PhaseTrace,
    case_a_bound,
    detect_special_vertex,
    efl_coloring,
    greedy_high_degree,
    is_rainbow,
    partition_coloring,
    phase2_bound,
)
from .errors import *  # noqa: F401,F403
from .formats import parse, parse_coloring, serialize, serialize_coloring
from .generators import dual_affine_plane, pencil, random_linear_uniform, weakly_dense_stream
from .model import Coloring, Hypergraph, SqrtGate, adjacency, build, degree, min_degree
from .oracle import ChiResult, brute_force_chi, chromatic_number, validate_coloring

__version__ = "0.1.0"
