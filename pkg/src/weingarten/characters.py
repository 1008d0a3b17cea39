"""Symmetric-group characters, Schur and zonal principal specializations.

Characters use the Murnaghan-Nakayama rule on beta-sets.  Zonal spherical
functions of the Gelfand pair ``(S_2n, H_n)`` are computed literally as the
``H_n`` average of ``chi_{2 lambda}``.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import cache
from .algebra import Polynomial
from .combinatorics import (
    Partition,
    Permutation,
    as_partition,
    class_size,
    coset_representative,
    cycletype,
    double_coset_size,
    hyperoctahedral_elements,
    hyperoctahedral_order,
    partitions,
    z_of,
)

log = logging.getLogger(__name__)

MAX_CHARACTER_N = 12
MAX_ZONAL_N = 5


def _rim_hook_removals(lam: tuple[int, ...], r: int):
    """Yield ``(shape, height)`` for each rim hook of length ``r`` in ``lam``."""
    size = len(lam)
    beads = [lam[i] + size - 1 - i for i in range(size)]
    bead_set = set(beads)
    for b in beads:
        target = b - r
        if target < 0 or target in bead_set:
            continue
        height = sum(1 for x in beads if target < x < b)
        new = sorted((x for x in beads if x != b), reverse=True)
        new.append(target)
        new.sort(reverse=True)
        shape = tuple(new[i] - (size - 1 - i) for i in range(size))
        yield tuple(p for p in shape if p > 0), height


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    total = 0
    for shape, height in _rim_hook_removals(lam, r):
        value = _mn(shape, rest)
        total += -value if height % 2 else value
    return total


def character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character ``chi_lam`` evaluated on cycletype ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    if lam.size > MAX_CHARACTER_N:
        raise ValueError(f"characters beyond S_{MAX_CHARACTER_N} are not supported")
    return _mn(tuple(lam), tuple(sorted(mu, reverse=True)))


def dimension(lam: Sequence[int]) -> int:
    lam = as_partition(lam)
    return character(lam, (1,) * lam.size)


_tables: dict[tuple[str, int], dict] = {}


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    """Full table of ``S_n``, loaded from or stored to the cache directory."""
    key = ("characters", n)
    if key in _tables:
        return _tables[key]
    parts = partitions(n)
    stored = cache.load_table("characters", n)
    table = None
    if stored is not None:
        try:
            table = {(lam, mu): int(stored[str(lam)][str(mu)]) for lam in parts for mu in parts}
        except (KeyError, ValueError, TypeError):
            table = None
    if table is not None and not _orthogonal_columns(table, parts):
        log.warning("cached character table for n=%d fails orthogonality, recomputing", n)
        table = None
    if table is None:
        table = {(lam, mu): character(lam, mu) for lam in parts for mu in parts}
        cache.store_table(
            "characters", n, {str(lam): {str(mu): table[lam, mu] for mu in parts} for lam in parts}
        )
    _tables[key] = table
    return table


def _orthogonal_columns(table, parts) -> bool:
    for i, mu in enumerate(parts):
        for nu in parts[i:]:
            total = sum(table[lam, mu] * table[lam, nu] for lam in parts)
            if total != (z_of(mu) if mu == nu else 0):
                return False
    return True


def _normalized(table, parts) -> bool:
    n = parts[0].size if parts else 0
    one, top = Partition((1,) * n), Partition((n,))
    return all(table[lam, one] == 1 for lam in parts) and all(table[top, b] == 1 for b in parts)


def clear_memory_tables() -> None:
    """Drop in-process tables (the disk cache is untouched)."""
    _tables.clear()
    _hn_cycletypes.cache_clear()


def schur_principal(lam: Sequence[int]) -> Polynomial:
    """``s_lam(1^N) = (1/n!) sum_mu |C_mu| chi_lam(mu) N^{l(mu)}``."""
    lam = as_partition(lam)
    n = lam.size
    coeffs = [Fraction(0)] * (n + 1)
    for mu in partitions(n):
        coeffs[mu.length] += class_size(mu) * character(lam, mu)
    return Polynomial([c / math.factorial(n) for c in coeffs])


@lru_cache(maxsize=None)
def _hn_cycletypes(n: int, representative: tuple[int, ...]) -> dict[Partition, int]:
    tau = Permutation(representative, True)
    counts: dict[Partition, int] = {}
    for xi in hyperoctahedral_elements(n):
        ct = cycletype(tau * xi)
        counts[ct] = counts.get(ct, 0) + 1
    return counts


def zonal_spherical(lam: Sequence[int], beta: Sequence[int], representative: Permutation | None = None) -> Fraction:
    """``omega_lam(tau) = (1/|H_n|) sum_{xi in H_n} chi_{2 lam}(tau xi)``.

    ``tau`` is ``representative`` if given, otherwise a fixed permutation of
    cosettype ``beta``.
    """
    lam, beta = as_partition(lam), as_partition(beta)
    n = lam.size
    if beta.size != n:
        raise ValueError("weight mismatch")
    if n > MAX_ZONAL_N:
        raise ValueError(f"zonal spherical functions are limited to n <= {MAX_ZONAL_N}")
    if representative is None:
        table = zonal_table(n)
        return table[lam, beta]
    return _zonal_direct(lam, representative)


def _zonal_direct(lam: Partition, tau: Permutation) -> Fraction:
    n = lam.size
    doubled = Partition(2 * p for p in lam)
    chars = character_table(2 * n)
    total = sum(chars[doubled, ct] * mult for ct, mult in _hn_cycletypes(n, tau.images).items())
    return Fraction(total, hyperoctahedral_order(n))


def zonal_table(n: int) -> dict[tuple[Partition, Partition], Fraction]:
    key = ("zonal", n)
    if key in _tables:
        return _tables[key]
    if n > MAX_ZONAL_N:
        raise ValueError(f"zonal spherical functions are limited to n <= {MAX_ZONAL_N}")
    parts = partitions(n)
    stored = cache.load_table("zonal", n)
    table = None
    if stored is not None:
        try:
            table = {(lam, b): Fraction(stored[str(lam)][str(b)]) for lam in parts for b in parts}
        except (KeyError, ValueError, TypeError, ZeroDivisionError):
            table = None
    if table is not None and not _normalized(table, parts):
        log.warning("cached zonal table for n=%d is not normalized, recomputing", n)
        table = None
    if table is None:
        table = {}
        for b in parts:
            rep = coset_representative(b)
            for lam in parts:
                table[lam, b] = _zonal_direct(lam, rep)
        if not _normalized(table, parts):
            raise ArithmeticError("zonal spherical function is not normalized at the identity")
        cache.store_table(
            "zonal", n, {str(lam): {str(b): str(table[lam, b]) for b in parts} for lam in parts}
        )
    _tables[key] = table
    return table


def zonal_principal(lam: Sequence[int]) -> Polynomial:
    """``Z_lam(1^N) = (1/(2^n n!)) sum_mu |K_mu| omega_lam(mu) N^{l(mu)}``."""
    lam = as_partition(lam)
    n = lam.size
    coeffs = [Fraction(0)] * (n + 1)
    for mu in partitions(n):
        coeffs[mu.length] += double_coset_size(mu) * zonal_spherical(lam, mu)
    h = hyperoctahedral_order(n)
    return Polynomial([c / h for c in coeffs])
