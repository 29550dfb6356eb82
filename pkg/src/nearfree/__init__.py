"""Exact near-freeness analysis of conic-line arrangements in the complex projective plane."""

from .arrangement import Arrangement, ConicSpec, LineSpec, defining_polynomial, load_arrangement, parse_arrangement, validate
from .combinat import count_admissible, degree_upper_bound, mdr_lower_bound, nearly_free_candidates
from .jacobian import mdr, milnor_dim, minimal_relation, nearly_free_verdict, syzygy_report, tjurina_global
from .singular import WeakCombinatorics, group_and_classify

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "ConicSpec", "LineSpec", "WeakCombinatorics", "count_admissible",
    "defining_polynomial", "degree_upper_bound", "group_and_classify", "load_arrangement",
    "mdr", "mdr_lower_bound", "milnor_dim", "minimal_relation", "nearly_free_candidates",
    "nearly_free_verdict", "parse_arrangement", "syzygy_report", "tjurina_global", "validate",
]
