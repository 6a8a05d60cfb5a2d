"""Exact counting and explicit enumeration of unitary-invariant contractions
of complex tensors of mixed orders."""

__version__ = "0.1.0"

from .counting import count_fixed, count_multi, count_sequence_multi, count_table_fixed, mixed_order_family
from .oracle import count_orbits_bruteforce, count_orbits_burnside
from .partitions import Partition, partition_sum, partitions_of, sym_factor
from .structures import ColoredBipartiteGraph, ColoredVertexSet, ColorType, ContractionSpec

__all__ = [
    "ColorType",
    "ColoredVertexSet",
    "ContractionSpec",
    "ColoredBipartiteGraph",
    "Partition",
    "partitions_of",
    "sym_factor",
    "partition_sum",
    "count_fixed",
    "count_multi",
    "count_sequence_multi",
    "count_table_fixed",
    "mixed_order_family",
    "count_orbits_bruteforce",
    "count_orbits_burnside",
]
