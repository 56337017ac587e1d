"""Exact c = 1 Virasoro machinery on charged free-boson Fock spaces."""

from .characters import (BranchingResult, Character, QSeries, branch, combine, fock_character,
                         partition_series, verify_vacuum_decomposition)
from .errors import (ConsistencyError, DomainError, InconsistentBranchingError, OutOfHypothesisError,
                     SectorMismatchError, StructuralError, Virc1Error)
from .fock import FockLevelSpace, FockVector, Partition, apply_J, enumerate_partitions, inner_product
from .sector_arith import (INFINITE, Dim, SectorTable, UntwistedGrouping, Verdict, c1_continuum_verdict,
                           global_index, infinite_dimension_criterion, restricted_dimension,
                           subsystem_global_index, twisted_lower_bound)
from .sugawara import (CommutatorReport, LevelOperator, adjoint_check, build_L, commutator_check,
                       find_lowest_weight_vectors)
from .verma import DegeneracyClass, LowestWeight, ShapovalovMatrix, classify, gram_matrix, irreducible_character, kernel

__version__ = "0.1.0"
