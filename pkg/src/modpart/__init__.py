"""Exact partition counts by alternating sum type and length type, with
truncated q-series tools and brute-force verifiers."""

__version__ = "0.1.0"

from .errors import DomainError, ModpartError, ParameterError, TruncationError
from .partitions import (
    BasicUnit,
    Case,
    Constraint,
    Partition,
    alt_sum_type,
    basic_units,
    case_classify,
    conjugate,
    enumerate_partitions,
    is_mixed,
    is_pure,
    length_type,
    partitions_up_to,
    unit_distance,
)
from .qseries import TruncatedSeries, coeff, geometric_factor, pochhammer_chain, series_add, series_mul
from .report import CellResult, VerificationReport

__all__ = [
    "__version__",
    "ModpartError", "ParameterError", "DomainError", "TruncationError",
    "Partition", "Constraint", "BasicUnit", "Case",
    "enumerate_partitions", "partitions_up_to", "conjugate", "alt_sum_type", "length_type",
    "basic_units", "case_classify", "unit_distance", "is_pure", "is_mixed",
    "TruncatedSeries", "series_add", "series_mul", "coeff", "geometric_factor", "pochhammer_chain",
    "CellResult", "VerificationReport",
]
