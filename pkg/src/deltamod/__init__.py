"""Exact tools for bounded-subdeterminant integer matrices.

Core objects: integer matrices with arbitrary-precision entries, exact
modularity checks, the partition-indexed extremal families, admissible
clique extensions, long-line profiles, and a desk-scale column-number
search. See the README for the command-line surface.
"""

from .exact import (det, det_cofactor, hermite_triangularize, is_parallel,
                    max_abs_full_rank_subdet, primitive_part, rank)
from .extensions import (CanonicalColumn, CanonicalPair, TripleRefutation,
                         canonical_column, clique_extension_max_subdet,
                         clique_matrix, corner_det, enumerate_pair_extensions,
                         enumerate_single_extensions, max_subset_sum,
                         refute_triple_extensions)
from .families import (ExtremalMatrix, Partition, build_A, build_A_lee,
                       expected_count, partition_count, partitions,
                       sporadic_rank3)
from .intmatrix import DegenerateRankError, IntMatrix, ShapeError, SubmatrixWitness
from .lines import (LineMultiset, NonIsoCertificate, distinguishing_report,
                    line_length_multiset, long_lines_through, nu_formula,
                    parallel_classes, recover_partition)
from .modularity import (ModularityReport, append_zero_sum_row, drop_last_row,
                         is_delta_modular, modularity_level)
from .search import (SearchCertificate, SearchConfig, column_universe,
                     hermite_bases, max_columns_search, verify_is_feasible)
from .verify import VerifySuiteReport, run_verify_suite

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
