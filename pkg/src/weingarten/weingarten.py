"""Weingarten functions of U(N) and O(N) as exact rational functions of N.

Two independent routes are provided: character sums (Schur and zonal
specializations) giving closed forms in ``N``, and Gram-matrix inversion at
a fixed integer dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import RationalFunction, solve_integer_system, substitute_shift
from .characters import (
    character,
    clear_memory_tables,
    dimension,
    schur_principal,
    zonal_principal,
    zonal_spherical,
)
from .combinatorics import (
    Matching,
    Partition,
    Permutation,
    all_permutations,
    as_partition,
    coset_type,
    matchings,
    partitions,
    standard_matching,
    standard_permutation,
)

MAX_UNITARY_N = 6
MAX_ORTHOGONAL_N = 5
MAX_GRAM_UNITARY_N = 5
MAX_GRAM_ORTHOGONAL_N = 4

GROUPS = ("unitary", "orthogonal", "orthogonal-shifted")


@dataclass(frozen=True)
class WeingartenResult:
    group: str
    partition: Partition
    value: RationalFunction

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "partition": str(self.partition),
            "value": self.value.to_string(),
            "factored": self.value.to_string(factored=True),
            "numerator": [str(c) for c in self.value.num.coeffs],
            "denominator": [str(c) for c in self.value.den.coeffs],
        }


@lru_cache(maxsize=None)
def _wg_unitary(alpha: Partition) -> RationalFunction:
    n = alpha.size
    total = RationalFunction(0)
    for lam in partitions(n):
        chi = character(lam, alpha)
        if chi == 0:
            continue
        d = dimension(lam)
        total = total + RationalFunction(d * d * chi, schur_principal(lam))
    return total * RationalFunction(Fraction(1, math.factorial(n) ** 2))


def wg_unitary(alpha: Sequence[int]) -> RationalFunction:
    """Unitary Weingarten function of cycletype ``alpha``."""
    alpha = as_partition(alpha)
    if alpha.size > MAX_UNITARY_N:
        raise ValueError(f"|alpha| = {alpha.size} exceeds the bound {MAX_UNITARY_N}")
    return _wg_unitary(alpha)


@lru_cache(maxsize=None)
def _wg_orthogonal(beta: Partition) -> RationalFunction:
    n = beta.size
    total = RationalFunction(0)
    for lam in partitions(n):
        omega = zonal_spherical(lam, beta)
        if omega == 0:
            continue
        # dimension of the doubled irreducible, i.e. chi_{2 lam}(1^{2n})
        d = dimension(tuple(2 * p for p in lam))
        total = total + RationalFunction(d * omega, zonal_principal(lam))
    return total * RationalFunction(Fraction(2**n * math.factorial(n), math.factorial(2 * n)))


def wg_orthogonal(beta: Sequence[int]) -> RationalFunction:
    """Orthogonal Weingarten function of cosettype ``beta`` at dimension ``N``."""
    beta = as_partition(beta)
    if beta.size > MAX_ORTHOGONAL_N:
        raise ValueError(f"|beta| = {beta.size} exceeds the bound {MAX_ORTHOGONAL_N}")
    return _wg_orthogonal(beta)


def clear_memory_caches() -> None:
    """Forget memoized Weingarten values and character tables."""
    _wg_unitary.cache_clear()
    _wg_orthogonal.cache_clear()
    clear_memory_tables()


def wg_orthogonal_shifted(beta: Sequence[int]) -> RationalFunction:
    """Orthogonal Weingarten function at dimension ``N + 1``."""
    return substitute_shift(wg_orthogonal(beta), 1)


def weingarten(group: str, partition: Sequence[int]) -> WeingartenResult:
    partition = as_partition(partition)
    funcs = {
        "unitary": wg_unitary,
        "orthogonal": wg_orthogonal,
        "orthogonal-shifted": wg_orthogonal_shifted,
    }
    if group not in funcs:
        raise ValueError(f"unknown group {group!r}; expected one of {GROUPS}")
    return WeingartenResult(group, partition, funcs[group](partition))


# -- Gram-matrix oracles ---------------------------------------------------

def gram_wg_unitary(alpha: Sequence[int], N: int) -> Fraction:
    """``(G^{-1})_{id, pi}`` for ``G_{s,t} = N^{l(s t^{-1})}`` over ``S_n``."""
    alpha = as_partition(alpha)
    n = alpha.size
    if n > MAX_GRAM_UNITARY_N:
        raise ValueError(f"Gram oracle limited to n <= {MAX_GRAM_UNITARY_N}")
    if N < n:
        raise ZeroDivisionError(f"Gram matrix is singular for N={N} < n={n}")
    group = list(all_permutations(n))
    index = {g: i for i, g in enumerate(group)}
    lengths = {g: g.length for g in group}
    gram = [[N ** lengths[s * t.inverse()] for t in group] for s in group]
    rhs = [0] * len(group)
    rhs[index[Permutation.identity(n)]] = 1
    solution = solve_integer_system(gram, rhs)
    return solution[index[standard_permutation(alpha)]]


def gram_wg_orthogonal(beta: Sequence[int], N: int) -> Fraction:
    """``(G^{-1})_{t, m}`` for ``G_{m,m'} = N^{l(cosettype(m, m'))}`` over matchings."""
    beta = as_partition(beta)
    n = beta.size
    if n > MAX_GRAM_ORTHOGONAL_N:
        raise ValueError(f"Gram oracle limited to n <= {MAX_GRAM_ORTHOGONAL_N}")
    if N < 2 * n:
        raise ZeroDivisionError(f"Gram oracle requires N >= 2n (N={N}, n={n})")
    ms = matchings(n)
    index = {m: i for i, m in enumerate(ms)}
    gram = [[N ** coset_type(a, b).length for b in ms] for a in ms]
    rhs = [0] * len(ms)
    rhs[index[Matching.trivial(n)]] = 1
    solution = solve_integer_system(gram, rhs)
    return solution[index[standard_matching(beta)]]
