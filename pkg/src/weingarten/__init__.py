"""Exact Weingarten calculus for the unitary and orthogonal groups."""

from .algebra import LaurentSeries, Polynomial, RationalFunction, laurent_expand
from .combinatorics import Matching, Partition, Permutation, coset_type, cycletype, hat
from .counts import count_table
from .enumeration import (
    enumerate_orthogonal,
    enumerate_unitary,
    orthogonal_map_census,
    orthogonal_map_coefficient,
    orthogonal_map_series,
    theorem1_series,
    theorem2_coefficient,
    theorem3_series,
    theorem4_coefficient,
    unitary_map_census,
    unitary_map_coefficient,
    unitary_map_series,
)
from .weingarten import weingarten, wg_orthogonal, wg_orthogonal_shifted, wg_unitary
from .wick import IndexedProduct, complex_wick_moment, real_wick_moment

__version__ = "0.1.0"

__all__ = [
    "IndexedProduct",
    "LaurentSeries",
    "Matching",
    "Partition",
    "Permutation",
    "Polynomial",
    "RationalFunction",
    "complex_wick_moment",
    "count_table",
    "coset_type",
    "cycletype",
    "enumerate_orthogonal",
    "enumerate_unitary",
    "hat",
    "laurent_expand",
    "orthogonal_map_census",
    "orthogonal_map_coefficient",
    "orthogonal_map_series",
    "real_wick_moment",
    "theorem1_series",
    "theorem2_coefficient",
    "theorem3_series",
    "theorem4_coefficient",
    "unitary_map_census",
    "unitary_map_coefficient",
    "unitary_map_series",
    "weingarten",
    "wg_orthogonal",
    "wg_orthogonal_shifted",
    "wg_unitary",
]
