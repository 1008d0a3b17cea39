"""Counting families attached to 1/N expansions of Weingarten functions.

* monotone factorizations of a permutation (unitary, dimension N);
* proper factorizations, via the Frobenius character formula;
* matching-monotone factorizations (orthogonal, dimension N);
* palindromic monotone factorizations (orthogonal, dimension N + 1);
* orthogonal proper factorizations, via zonal spherical functions.

Transposition sequences are counted by dynamic programming over
``(partial product, last t)`` states, which is the depth-first search with
identical subtrees merged.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .algebra import LaurentSeries
from .characters import character, dimension, zonal_spherical
from .combinatorics import (
    Partition,
    as_partition,
    class_size,
    double_coset_size,
    hyperoctahedral_order,
    partitions,
    standard_matching,
    standard_permutation,
)

MAX_MONOTONE_N = 6
MAX_MONOTONE_K = 12
MAX_MATCHING_N = 4
MAX_MATCHING_K = 10
MAX_PROPER_N = 4
MAX_ORTHOGONAL_PROPER_N = 3
MAX_ORTHOGONAL_PROPER_K = 3

FAMILIES = ("monotone", "proper", "matching-monotone", "palindromic-monotone", "orthogonal-proper")


@dataclass
class CountTable:
    family: str
    partition: Partition
    counts: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.counts.get(key, 0)

    def as_list(self) -> list:
        return [self.counts[k] for k in sorted(self.counts)]

    def to_json(self) -> dict:
        def key(k):
            return str(k) if not isinstance(k, tuple) else ",".join(map(str, k))

        def val(v):
            return v if isinstance(v, int) else str(v)

        return {
            "family": self.family,
            "partition": str(self.partition),
            "counts": {key(k): val(v) for k, v in sorted(self.counts.items())},
            "metadata": self.metadata,
        }


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _transposition(size: int, s: int, t: int) -> tuple[int, ...]:
    images = list(range(size))
    images[s], images[t] = t, s
    return tuple(images)


# -- unitary monotone --------------------------------------------------------

@lru_cache(maxsize=None)
def _monotone_table(n: int, k_max: int) -> tuple[dict, ...]:
    """For each length, the map ``permutation -> number of monotone products``."""
    ident = tuple(range(n))
    layers = [{ident: 1}]
    states = {(ident, 0): 1}
    moves = [(t, s, _transposition(n, s, t)) for t in range(n) for s in range(t)]
    for _ in range(k_max):
        nxt: dict = defaultdict(int)
        for (perm, last), count in states.items():
            for t, s, tr in moves:
                if t < last:
                    continue
                # right multiplication by the new factor
                nxt[tuple(perm[y] for y in tr), t] += count
        states = nxt
        layer: dict = defaultdict(int)
        for (perm, _), count in states.items():
            layer[perm] += count
        layers.append(dict(layer))
    return tuple(layers)


def monotone_counts(alpha: Sequence[int], k_max: int) -> CountTable:
    """``M_alpha^k`` for ``0 <= k <= k_max``: monotone transposition products equal to the standard permutation."""
    alpha = as_partition(alpha)
    n = alpha.size
    _check(n <= MAX_MONOTONE_N and k_max <= MAX_MONOTONE_K, "monotone_counts bounds exceeded")
    target = standard_permutation(alpha).images
    layers = _monotone_table(n, k_max)
    return CountTable("monotone", alpha, {k: layers[k].get(target, 0) for k in range(k_max + 1)})


def monotone_series(alpha: Sequence[int], order: int) -> LaurentSeries:
    """``(-1)^{n + l(alpha)} sum_k M_alpha^k N^{-n-k}`` through ``N^{-order}``."""
    alpha = as_partition(alpha)
    n = alpha.size
    table = monotone_counts(alpha, max(order - n, 0))
    sign = (-1) ** (n + alpha.length)
    return LaurentSeries.from_terms({n + k: sign * c for k, c in table.counts.items()}, order)


# -- proper factorizations ---------------------------------------------------

def _partition_tuples(parts: list[Partition], k: int, depth: int) -> Iterator[tuple[Partition, ...]]:
    """``k``-tuples of non-identity partitions whose ranks sum to ``depth``."""
    if k == 0:
        if depth == 0:
            yield ()
        return
    for mu in parts:
        r = mu.rank
        # every remaining factor needs rank >= 1
        if r > depth - (k - 1):
            continue
        for rest in _partition_tuples(parts, k - 1, depth - r):
            yield (mu,) + rest


def proper_count(alpha: Sequence[int], k: int, d: int) -> Fraction:
    """``P_alpha^{k,d}`` from the Frobenius character formula.

    ``k = 0`` counts the empty factorization, which exists only for the
    identity at depth 0.  The result is checked to be an integer.
    """
    alpha = as_partition(alpha)
    n = alpha.size
    _check(n <= MAX_PROPER_N, f"proper_count limited to |alpha| <= {MAX_PROPER_N}")
    if k == 0:
        return Fraction(int(d == 0 and alpha.rank == 0))
    nonid = [mu for mu in partitions(n) if mu.rank > 0]
    tuples = list(_partition_tuples(nonid, k, d))
    if not tuples:
        return Fraction(0)
    total = Fraction(0)
    for lam in partitions(n):
        dim = dimension(lam)
        inner = Fraction(0)
        for mus in tuples:
            term = Fraction(1)
            for mu in mus:
                term *= Fraction(class_size(mu) * character(lam, mu), dim)
            inner += term
        total += dim * character(lam, alpha) * inner
    total /= math.factorial(n)
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"non-integral proper count {total} for {alpha}, k={k}, d={d}")
    return total


def proper_alternating_sum(alpha: Sequence[int], d: int) -> Fraction:
    """``sum_k (-1)^k P_alpha^{k,d}``."""
    return sum((Fraction((-1) ** k) * proper_count(alpha, k, d) for k in range(d + 1)), Fraction(0))


def proper_series(alpha: Sequence[int], order: int) -> LaurentSeries:
    alpha = as_partition(alpha)
    n = alpha.size
    return LaurentSeries.from_terms(
        {n + d: proper_alternating_sum(alpha, d) for d in range(max(order - n, 0) + 1)}, order
    )


# -- matching monotone -------------------------------------------------------

def _apply_transposition_to_matching(partner: tuple[int, ...], s: int, t: int) -> tuple[int, ...]:
    """Partner array of ``(s t)(m)`` given the partner array of ``m``."""
    swap = {s: t, t: s}
    new = list(partner)
    for x, y in enumerate(partner):
        new[swap.get(x, x)] = swap.get(y, y)
    return tuple(new)


def _partner_array(blocks, n: int) -> tuple[int, ...]:
    def idx(label: int) -> int:
        return label - 1 if label > 0 else n - label - 1

    out = [0] * (2 * n)
    for b in blocks:
        a, c = tuple(b)
        out[idx(a)] = idx(c)
        out[idx(c)] = idx(a)
    return tuple(out)


@lru_cache(maxsize=None)
def _matching_monotone_layers(n: int, k_max: int) -> tuple[dict, ...]:
    # index of a is a-1, of a^ is n+a-1; t ranges over unhatted labels
    trivial = tuple(list(range(n, 2 * n)) + list(range(n)))
    moves = []
    for t in range(n):
        for a in range(t):
            moves.append((t, a))
            moves.append((t, n + a))
    # the product tau_1...tau_k acts with tau_k first, so build from the right
    # with t weakly decreasing
    layers = [{trivial: 1}]
    states = {(trivial, n): 1}
    for _ in range(k_max):
        nxt: dict = defaultdict(int)
        for (m, bound), count in states.items():
            for t, s in moves:
                if t > bound:
                    continue
                nxt[_apply_transposition_to_matching(m, s, t), t] += count
        states = nxt
        layer: dict = defaultdict(int)
        for (m, _), count in states.items():
            layer[m] += count
        layers.append(dict(layer))
    return tuple(layers)


def matching_monotone_counts(beta: Sequence[int], k_max: int, target=None) -> CountTable:
    """``M~_beta^k``: sequences with ``t_i`` unhatted, ``t_i >= t_{i-1}``, ``t_i > h(s_i)``.

    Counts products whose action on the trivial matching is ``target``
    (default: the standard matching of cosettype ``beta``).
    """
    beta = as_partition(beta)
    n = beta.size
    _check(n <= MAX_MATCHING_N and k_max <= MAX_MATCHING_K, "matching_monotone_counts bounds exceeded")
    target = standard_matching(beta) if target is None else target
    key = _partner_array(target.blocks, n)
    layers = _matching_monotone_layers(n, k_max)
    return CountTable(
        "matching-monotone", beta, {k: layers[k].get(key, 0) for k in range(k_max + 1)}
    )


def matching_monotone_series(beta: Sequence[int], order: int) -> LaurentSeries:
    beta = as_partition(beta)
    n = beta.size
    table = matching_monotone_counts(beta, max(order - n, 0))
    return LaurentSeries.from_terms({n + k: (-1) ** k * c for k, c in table.counts.items()}, order)


# -- palindromic monotone ----------------------------------------------------

@dataclass(frozen=True)
class OrderConvention:
    """Total order on ``[n] u [n^]`` plus the sheet the larger letter ``t`` lives on."""

    name: str
    order: str  # "hat-below", "hat-above", "unhatted-first", "hatted-first"
    t_sheet: str  # "unhatted", "hatted", "any"

    def ranks(self, n: int) -> list[int]:
        """Rank of each label index (``a -> a-1``, ``a^ -> n+a-1``)."""
        if self.order == "hat-below":
            seq = [x for a in range(n) for x in (n + a, a)]
        elif self.order == "hat-above":
            seq = [x for a in range(n) for x in (a, n + a)]
        elif self.order == "unhatted-first":
            seq = list(range(2 * n))
        elif self.order == "hatted-first":
            seq = list(range(n, 2 * n)) + list(range(n))
        else:
            raise ValueError(f"unknown order {self.order!r}")
        rank = [0] * (2 * n)
        for r, x in enumerate(seq):
            rank[x] = r
        return rank

    def allows_t(self, index: int, n: int) -> bool:
        if self.t_sheet == "any":
            return True
        return (index < n) == (self.t_sheet == "unhatted")


CONVENTIONS = tuple(
    OrderConvention(f"{order}/{sheet}", order, sheet)
    for order in ("hat-below", "hat-above", "unhatted-first", "hatted-first")
    for sheet in ("unhatted", "hatted", "any")
)
CALIBRATION_TARGET = (1, 4, 13)
_calibrated: OrderConvention | None = None


def convention_by_name(name: str) -> OrderConvention:
    for c in CONVENTIONS:
        if c.name == name:
            return c
    raise ValueError(f"unknown order convention {name!r}")


def _hat_of(perm: tuple[int, ...], n: int) -> tuple[int, ...]:
    size = 2 * n
    inv = [0] * size
    for i, y in enumerate(perm):
        inv[y] = i

    def h(x: int) -> int:
        return x + n if x < n else x - n

    return tuple(h(inv[h(x)]) for x in range(size))


@lru_cache(maxsize=None)
def _palindromic_layers(n: int, k_max: int, convention: OrderConvention) -> tuple[dict, ...]:
    size = 2 * n
    rank = convention.ranks(n)
    moves = []
    for t in range(size):
        if not convention.allows_t(t, n):
            continue
        for s in range(size):
            if rank[s] < rank[t]:
                moves.append((rank[t], _transposition(size, s, t)))
    ident = tuple(range(size))
    layers = [{ident: 1}]
    states = {(ident, -1): 1}
    for _ in range(k_max):
        nxt: dict = defaultdict(int)
        for (perm, last), count in states.items():
            for r, tr in moves:
                if r < last:
                    continue
                nxt[tuple(perm[y] for y in tr), r] += count
        states = nxt
        layer: dict = defaultdict(int)
        for (perm, _), count in states.items():
            layer[perm] += count
        layers.append(dict(layer))
    return tuple(layers)


def palindromic_monotone_counts(
    beta: Sequence[int], k_max: int, order_convention: OrderConvention | str | None = None
) -> CountTable:
    """``M^_beta^k``: monotone ``sigma`` with ``sigma hat(sigma) = pi hat(pi)``.

    ``pi`` is the standard permutation of cycletype ``beta`` acting on the
    unhatted letters.  ``order_convention`` defaults to the calibrated one.
    """
    beta = as_partition(beta)
    n = beta.size
    _check(n <= MAX_MATCHING_N and k_max <= MAX_MATCHING_K, "palindromic_monotone_counts bounds exceeded")
    if order_convention is None:
        order_convention = calibrate_order_convention()
    elif isinstance(order_convention, str):
        order_convention = convention_by_name(order_convention)
    pi = tuple(list(standard_permutation(beta).images) + list(range(n, 2 * n)))
    pi_hat = _hat_of(pi, n)
    target = tuple(pi[y] for y in pi_hat)
    layers = _palindromic_layers(n, k_max, order_convention)
    counts = {}
    for k in range(k_max + 1):
        counts[k] = sum(c for perm, c in layers[k].items() if _palindrome_product(perm, n) == target)
    return CountTable(
        "palindromic-monotone", beta, counts, {"order_convention": order_convention.name}
    )


def _palindrome_product(perm: tuple[int, ...], n: int) -> tuple[int, ...]:
    ph = _hat_of(perm, n)
    return tuple(perm[y] for y in ph)


def calibrate_order_convention() -> OrderConvention:
    """First convention whose ``M^_(2)`` starts ``(1, 4, 13)`` at ``k = 1, 2, 3``."""
    global _calibrated
    if _calibrated is None:
        for conv in CONVENTIONS:
            table = palindromic_monotone_counts((2,), 3, conv)
            if tuple(table[k] for k in (1, 2, 3)) == CALIBRATION_TARGET:
                _calibrated = conv
                break
        else:
            raise ArithmeticError("no order convention reproduces the calibration target")
    return _calibrated


def palindromic_monotone_series(beta: Sequence[int], order: int, order_convention=None) -> LaurentSeries:
    beta = as_partition(beta)
    n = beta.size
    table = palindromic_monotone_counts(beta, max(order - n, 0), order_convention)
    return LaurentSeries.from_terms({n + k: (-1) ** k * c for k, c in table.counts.items()}, order)


# -- orthogonal proper -------------------------------------------------------

def orthogonal_proper_count(beta: Sequence[int], k: int, d: int) -> Fraction:
    """``P~_beta^{k,d}`` from the zonal spherical function formula.

    Counts ``k``-tuples in ``S_2n`` with no factor in ``H_n``, product a
    fixed permutation of cosettype ``beta`` and total depth ``d``.  ``k = 0``
    is normalized so that the series term is ``[beta = 1^n][d = 0]``.
    """
    beta = as_partition(beta)
    n = beta.size
    _check(n <= MAX_ORTHOGONAL_PROPER_N and k <= MAX_ORTHOGONAL_PROPER_K, "orthogonal_proper_count bounds exceeded")
    if k == 0:
        return Fraction(int(d == 0 and beta.rank == 0), hyperoctahedral_order(n))
    nonid = [mu for mu in partitions(n) if mu.rank > 0]
    tuples = list(_partition_tuples(nonid, k, d))
    if not tuples:
        return Fraction(0)
    total = Fraction(0)
    for lam in partitions(n):
        inner = Fraction(0)
        for mus in tuples:
            term = Fraction(1)
            for mu in mus:
                term *= double_coset_size(mu) * zonal_spherical(lam, mu)
            inner += term
        total += dimension(tuple(2 * p for p in lam)) * zonal_spherical(lam, beta) * inner
    total /= math.factorial(2 * n)
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"non-integral orthogonal proper count {total}")
    return total


def orthogonal_proper_coefficient(beta: Sequence[int], d: int) -> Fraction:
    """``sum_k (-1)^k P~^{k,d} / (2^n n!)^{k-1}``, the coefficient of ``N^{-n-d}``."""
    beta = as_partition(beta)
    h = hyperoctahedral_order(beta.size)
    total = Fraction(0)
    for k in range(min(d, MAX_ORTHOGONAL_PROPER_K) + 1):
        total += Fraction((-1) ** k) * orthogonal_proper_count(beta, k, d) / Fraction(h) ** (k - 1)
    return total


def orthogonal_proper_series(beta: Sequence[int], order: int) -> LaurentSeries:
    beta = as_partition(beta)
    n = beta.size
    top = order - n
    _check(top <= MAX_ORTHOGONAL_PROPER_K, "orthogonal proper series needs k <= 3, so order <= n + 3")
    return LaurentSeries.from_terms({n + d: orthogonal_proper_coefficient(beta, d) for d in range(top + 1)}, order)


def count_table(family: str, partition: Sequence[int], k_max: int, order_convention=None) -> CountTable:
    """Dispatch used by the command line."""
    partition = as_partition(partition)
    if family == "monotone":
        return monotone_counts(partition, k_max)
    if family == "matching-monotone":
        return matching_monotone_counts(partition, k_max)
    if family == "palindromic-monotone":
        return palindromic_monotone_counts(partition, k_max, order_convention)
    if family == "proper":
        counts = {(k, d): int(proper_count(partition, k, d)) for d in range(k_max + 1) for k in range(d + 1)}
        return CountTable("proper", partition, {key: v for key, v in counts.items() if v})
    if family == "orthogonal-proper":
        counts = {
            (k, d): orthogonal_proper_count(partition, k, d)
            for d in range(k_max + 1)
            for k in range(1, min(d, MAX_ORTHOGONAL_PROPER_K) + 1)
        }
        return CountTable("orthogonal-proper", partition, {key: int(v) for key, v in counts.items() if v})
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
