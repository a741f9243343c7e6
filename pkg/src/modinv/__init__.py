"""Modular invariants, their fusion and alpha-induction sectors from exact modular data."""
from .catalog import builtin, builtin_e6_double, builtin_su2, dumps, load, loads, save
from .errors import (
    ComputationError, DataFormatError, EnumerationError, FactorizationError, FullSystemError,
    FusionAlgebraError, ModinvError, ParseError, PrecisionError, SingularExpressionError, SnapError,
    UsageError, ValidationError,
)
from .gram import gram_factorize
from .invariant_fusion import FusionTable, decompose, fuse, fusion_table
from .invariants import (
    CommutantBasis, ModularInvariant, classify, commutant_basis, enumerate_invariants,
    is_modular_invariant,
)
from .modular_data import (
    FusionRing, ModularData, ValidationReport, conjugation, fs_indicators, global_index,
    quantum_dims, require_valid, simple_currents, validate, verlinde,
)
from .scalars import ToleranceConfig, eval_expr, format_expr, parse_expr, snap_to_integer
from .sectors import (
    CanonicalObject, FullSystem, FusionGraph, SectorWord, factor_type_one, full_system,
    fusion_graph, gamma_pairing, iota_gram, match_invariant, system_counts, type_one_invariant,
    type_two_invariant, word_pair,
)

__version__ = "0.1.0"
