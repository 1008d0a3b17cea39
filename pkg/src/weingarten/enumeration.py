"""Direct enumeration of the factorization sets behind the map expansions.

Unitary
    ``F(pi, chi)``: factorizations ``Pi = tau1 tau2`` of ``Pi = pi rho`` where
    ``rho`` is a standard fixed-point-free complement on ``{n+1..n+m}`` and
    every cycle of ``tau1`` and of ``tau2`` holds exactly one of ``1..n``.

Orthogonal
    ``NF(beta, chi)``: pairs ``(Pi, theta)`` with ``theta`` a fixed-point-free
    involution of ``[n+m] u [n+m]^`` such that every cycle of
    ``f1 = theta p1`` and ``f2 = p2 theta`` holds exactly one marked label.

Both searches build the factors one image at a time and keep the cycle
condition of the *other* factor as a running constraint on partial chains,
so dead branches are cut as soon as two marked labels meet or a cycle
closes without one.

Full record lists grow like ``z_rho`` times the number of maps.  For the
unitary case :func:`iter_unitary_maps` walks one canonical labelling per
map instead; :func:`expand_orbit` recovers the ``z_rho`` records of a map.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as _permutations
from itertools import product as _product
from typing import Iterator, Sequence

from .algebra import LaurentSeries
from .combinatorics import (
    Partition,
    Permutation,
    as_partition,
    cycletype,
    hat,
    is_palindromic,
    partitions,
    standard_permutation,
    z_of,
)

MAX_UNITARY_RECORD_LABELS = 12
MAX_UNITARY_MAP_LABELS = 16
MAX_ORTHOGONAL_LABELS = 8


class EnumerationError(ValueError):
    """Raised when a search would exceed its configured size bound."""


# -- complements ---------------------------------------------------------------

def complement_types(n: int, length: int, chi: int) -> list[tuple[int, Partition]]:
    """``(m, rho-type)`` pairs compatible with Euler characteristic ``chi``.

    ``chi = l(pi) + l(rho) + n - m`` and ``l(rho) <= m/2`` give
    ``m <= 2 (n + l(pi) - chi)``.
    """
    out = []
    m_max = 2 * (n + length - chi)
    for m in range(0, m_max + 1):
        cycles = chi - length - n + m
        if m == 0:
            if cycles == 0:
                out.append((0, Partition()))
            continue
        if cycles < 1:
            continue
        for rho in partitions(m, min_part=2):
            if rho.length == cycles:
                out.append((m, rho))
    return out


def _standard_images(parts: Sequence[int]) -> list[int]:
    images = []
    start = 0
    for p in parts:
        images.extend(start + (i + 1) % p for i in range(p))
        start += p
    return images


class _Chains:
    """Partial permutation whose completed cycles must hold exactly one marked label."""

    __slots__ = ("end_of", "start_of", "marks", "log")

    def __init__(self, marked: Sequence[bool]):
        size = len(marked)
        self.end_of = list(range(size))
        self.start_of = list(range(size))
        self.marks = [1 if m else 0 for m in marked]
        self.log: list[tuple[int, int, int, int, int]] = []

    def grow(self, extra: Sequence[bool]) -> None:
        base = len(self.end_of)
        for i, m in enumerate(extra):
            self.end_of.append(base + i)
            self.start_of.append(base + i)
            self.marks.append(1 if m else 0)

    def link(self, y: int, z: int) -> bool:
        """Add ``y -> z``; ``y`` ends a chain and ``z`` starts one."""
        s = self.start_of[y]
        if s == z:
            if self.marks[s] != 1:
                return False
            self.log.append((-1, 0, 0, 0, 0))
            return True
        if self.marks[s] + self.marks[z] > 1:
            return False
        e = self.end_of[z]
        self.log.append((s, z, e, self.end_of[s], self.marks[s]))
        self.end_of[s] = e
        self.start_of[e] = s
        self.marks[s] += self.marks[z]
        return True

    def undo(self) -> None:
        s, z, e, old_end, old_marks = self.log.pop()
        if s < 0:
            return
        self.end_of[s] = old_end
        self.start_of[e] = z
        self.marks[s] = old_marks


def _cycles_of(images: Sequence[int]) -> int:
    seen = [False] * len(images)
    count = 0
    for i in range(len(images)):
        if not seen[i]:
            count += 1
            while not seen[i]:
                seen[i] = True
                i = images[i]
    return count


# -- unitary -------------------------------------------------------------------

@dataclass(frozen=True)
class UnitaryFactorization:
    """One element of ``F(pi, chi)``."""

    n: int
    m: int
    rho: Permutation
    Pi: Permutation
    tau1: Permutation
    tau2: Permutation
    chi: int

    @property
    def complement_type(self) -> Partition:
        return Partition(p for p in cycletype(self.rho) if p > 1)

    @property
    def weight(self) -> Fraction:
        """``(-1)^{l(rho)} / z_rho``."""
        rho = self.complement_type
        return Fraction((-1) ** rho.length, z_of(rho))

    def check(self) -> None:
        """Re-verify every defining property from scratch."""
        n, size = self.n, self.n + self.m
        assert self.Pi == self.tau1 * self.tau2, "tau1 tau2 != Pi"
        rho = self.complement_type
        assert all(self.rho(x) == x for x in range(1, n + 1)), "rho moves a marked label"
        assert sum(rho) == self.m, "rho has a fixed point"
        assert self.rho == standard_permutation(rho, offset=n), "rho is not standard"
        for tau in (self.tau1, self.tau2):
            for cyc in tau.cycles():
                assert sum(1 for x in cyc if x <= n) == 1, f"cycle {cyc} breaks the marking condition"
        chi = self.Pi.length - size + self.tau1.length + self.tau2.length
        assert chi == self.chi, "Euler characteristic mismatch"

    def to_json(self) -> dict:
        return {
            "group": "unitary",
            "n": self.n,
            "m": self.m,
            "rho": self.rho.to_string(machine=True),
            "complement_type": str(self.complement_type),
            "Pi": self.Pi.to_string(machine=True),
            "tau1": self.tau1.to_string(machine=True),
            "tau2": self.tau2.to_string(machine=True),
            "chi": self.chi,
        }


def _unitary_search(pi_images: Sequence[int], rho: Partition) -> Iterator[tuple[list[int], list[int]]]:
    """Yield ``(tau1, tau2)`` image arrays for fixed ``Pi = pi rho``."""
    n = len(pi_images)
    m = rho.size
    size = n + m
    Pi = list(pi_images) + [n + x for x in _standard_images(rho)]
    tau1 = [-1] * size
    tau2 = [-1] * size
    free = [True] * size
    chains = _Chains([i < n for i in range(size)])
    remaining = [m]

    def place(cur: int, y: int) -> bool:
        z = Pi[cur]
        if not chains.link(y, z):
            return False
        tau2[cur] = y
        tau1[y] = z
        return True

    def unplace(cur: int, y: int) -> None:
        chains.undo()
        tau2[cur] = -1
        tau1[y] = -1

    def walk(a: int, cur: int) -> Iterator[None]:
        # close the tau2 cycle of marked label a
        if place(cur, a):
            if a + 1 < n:
                yield from walk(a + 1, a + 1)
            elif remaining[0] == 0:
                yield None
            unplace(cur, a)
        for y in range(n, size):
            if not free[y]:
                continue
            if not place(cur, y):
                continue
            free[y] = False
            remaining[0] -= 1
            yield from walk(a, y)
            remaining[0] += 1
            free[y] = True
            unplace(cur, y)

    if n == 0:
        return
    for _ in walk(0, 0):
        yield list(tau1), list(tau2)


def enumerate_unitary(
    pi: Permutation | Sequence[int], chi: int, max_labels: int = MAX_UNITARY_RECORD_LABELS
) -> list[UnitaryFactorization]:
    """All of ``F(pi, chi)`` as explicit records, in deterministic order.

    ``pi`` may be a standard permutation or its cycletype.  Odd ``chi``
    gives an empty list (every factorization here is orientable).
    """
    pi = _as_standard(pi)
    alpha = cycletype(pi)
    n = pi.size
    if chi % 2:
        return []
    types = complement_types(n, alpha.length, chi)
    needed = n + max((m for m, _ in types), default=0)
    if needed > max_labels:
        raise EnumerationError(
            f"F({alpha}, {chi}) needs {needed} labels, above the record bound {max_labels}; "
            "use iter_unitary_maps for map-level sums"
        )
    records = []
    for m, rho in types:
        rho_perm = standard_permutation(rho, offset=n)
        Pi = Permutation(list(pi.images) + [n + x for x in _standard_images(rho)])
        for t1, t2 in _unitary_search(pi.images, rho):
            records.append(
                UnitaryFactorization(n, m, rho_perm, Pi, Permutation(t1), Permutation(t2), chi)
            )
    records.sort(key=lambda r: (r.m, tuple(-p for p in r.complement_type), r.tau1.images, r.tau2.images))
    return records


def _as_standard(pi) -> Permutation:
    if isinstance(pi, Permutation):
        if pi != standard_permutation(cycletype(pi)):
            raise ValueError(f"{pi} is not a standard permutation")
        return pi
    return standard_permutation(as_partition(pi))


@dataclass(frozen=True)
class UnitaryMap:
    """Canonical representative of the ``z_rho`` labellings of one map."""

    record: UnitaryFactorization

    @property
    def complement_type(self) -> Partition:
        return self.record.complement_type

    @property
    def vertices(self) -> int:
        return self.record.Pi.length


def _unitary_map_search(pi_images: Sequence[int], budget: int, max_labels: int):
    """Canonical lazy-labelling search, one leaf per map.

    ``tau2`` cycles are walked from marked labels ``0..n-1`` in order.  Each
    step either closes the cycle, continues to an already introduced label,
    or introduces a new internal vertex whose labels are numbered in
    discovery order.  ``budget`` is ``sum (d - 1)`` over internal vertices.
    """
    n = len(pi_images)
    Pi = list(pi_images)
    tau1 = [-1] * n
    tau2 = [-1] * n
    free: list[int] = []
    vertices: list[tuple[int, int]] = []
    chains = _Chains([True] * n)
    left = [budget]

    def place(cur: int, y: int) -> bool:
        z = Pi[cur]
        if not chains.link(y, z):
            return False
        tau2[cur] = y
        tau1[y] = z
        return True

    def unplace(cur: int, y: int) -> None:
        chains.undo()
        tau2[cur] = -1
        tau1[y] = -1

    def walk(a: int, cur: int):
        if place(cur, a):
            if a + 1 < n:
                yield from walk(a + 1, a + 1)
            elif left[0] == 0 and not free:
                yield None
            unplace(cur, a)
        for i in range(len(free)):
            y = free[i]
            if not place(cur, y):
                continue
            del free[i]
            yield from walk(a, y)
            free.insert(i, y)
            unplace(cur, y)
        start = len(Pi)
        for d in range(2, left[0] + 2):
            if start + d > max_labels:
                break
            Pi.extend(start + (i + 1) % d for i in range(d))
            tau1.extend([-1] * d)
            tau2.extend([-1] * d)
            chains.grow([False] * d)
            vertices.append((start, d))
            left[0] -= d - 1
            if place(cur, start):
                free.extend(range(start + 1, start + d))
                yield from walk(a, start)
                del free[len(free) - (d - 1):]
                unplace(cur, start)
            left[0] += d - 1
            vertices.pop()
            del chains.end_of[start:], chains.start_of[start:], chains.marks[start:]
            del Pi[start:], tau1[start:], tau2[start:]

    if n == 0:
        return
    for _ in walk(0, 0):
        yield list(vertices), list(tau1), list(tau2)


def _relabel_standard(n: int, vertices, tau1, tau2) -> tuple[Partition, list[int], list[int]]:
    """Reorder internal vertices by weakly decreasing size, ties by discovery."""
    order = sorted(range(len(vertices)), key=lambda i: (-vertices[i][1], i))
    new = list(range(n)) + [0] * (len(tau1) - n)
    nxt = n
    for i in order:
        start, d = vertices[i]
        for j in range(d):
            new[start + j] = nxt + j
        nxt += d
    size = len(tau1)
    t1 = [0] * size
    t2 = [0] * size
    for x in range(size):
        t1[new[x]] = new[tau1[x]]
        t2[new[x]] = new[tau2[x]]
    rho = Partition(sorted((d for _, d in vertices), reverse=True))
    return rho, t1, t2


def iter_unitary_maps(
    pi: Permutation | Sequence[int], chi: int, max_labels: int = MAX_UNITARY_MAP_LABELS
) -> Iterator[UnitaryMap]:
    """One canonical record per map of ``F(pi, chi)`` (records divided by ``z_rho``)."""
    pi = _as_standard(pi)
    alpha = cycletype(pi)
    n = pi.size
    if chi % 2:
        return
    budget = n + alpha.length - chi
    if budget < 0:
        return
    if n + 2 * budget > max_labels:
        raise EnumerationError(f"map search for ({alpha}, {chi}) may need {n + 2 * budget} labels > {max_labels}")
    for vertices, t1, t2 in _unitary_map_search(pi.images, budget, max_labels):
        rho, t1, t2 = _relabel_standard(n, vertices, t1, t2)
        rho_perm = standard_permutation(rho, offset=n)
        Pi = Permutation(list(pi.images) + [n + x for x in _standard_images(rho)])
        yield UnitaryMap(
            UnitaryFactorization(n, rho.size, rho_perm, Pi, Permutation(t1), Permutation(t2), chi)
        )


def centralizer_elements(n: int, rho: Partition) -> Iterator[list[int]]:
    """Elements of the centralizer of the standard ``rho`` on ``{n+1..n+m}``, as index arrays."""
    blocks: dict[int, list[int]] = {}
    start = n
    for p in rho:
        blocks.setdefault(p, []).append(start)
        start += p
    size = start
    groups = sorted(blocks.items())
    per_group = []
    for length, starts in groups:
        options = []
        for perm in _permutations(range(len(starts))):
            for shifts in _product(range(length), repeat=len(starts)):
                options.append((length, starts, perm, shifts))
        per_group.append(options)
    for choice in _product(*per_group):
        images = list(range(size))
        for length, starts, perm, shifts in choice:
            for i, s in enumerate(starts):
                target = starts[perm[i]]
                for j in range(length):
                    images[s + j] = target + (j + shifts[i]) % length
        yield images


def expand_orbit(record: UnitaryFactorization) -> list[UnitaryFactorization]:
    """All relabellings of ``record`` by the centralizer of ``rho``."""
    out = []
    n = record.n
    rho = record.complement_type
    for c in centralizer_elements(n, rho):
        cp = Permutation(c)
        ci = cp.inverse()
        out.append(
            UnitaryFactorization(
                n, record.m, record.rho, record.Pi, cp * record.tau1 * ci, cp * record.tau2 * ci, record.chi
            )
        )
    return out


def _unitary_records_or_maps(pi, chi, method: str):
    pi = _as_standard(pi)
    if method == "auto":
        alpha = cycletype(pi)
        needed = pi.size + 2 * (pi.size + alpha.length - chi)
        method = "records" if needed <= 10 else "maps"
    if method == "records":
        return "records", enumerate_unitary(pi, chi)
    if method == "maps":
        return "maps", [mp.record for mp in iter_unitary_maps(pi, chi)]
    raise ValueError(f"unknown method {method!r}")


def unitary_map_coefficient(pi, chi: int, method: str = "auto") -> Fraction:
    """``S_chi = sum_f (-1)^{l(rho)} / z_rho`` over ``F(pi, chi)``."""
    kind, items = _unitary_records_or_maps(pi, chi, method)
    if kind == "records":
        return sum((r.weight for r in items), Fraction(0))
    return Fraction(sum((-1) ** r.complement_type.length for r in items))


def sum_rule_value(pi, chi: int, method: str = "auto") -> Fraction:
    """``sum_f (-1)^{l(Pi)} / z_rho`` over ``F(pi, chi)``."""
    pi = _as_standard(pi)
    return (-1) ** pi.length * unitary_map_coefficient(pi, chi, method)


def unitary_map_census(pi, chi: int, method: str = "auto") -> dict[Partition, int]:
    """Number of maps per complement type (records of that type over ``z``)."""
    kind, items = _unitary_records_or_maps(pi, chi, method)
    counts = Counter(r.complement_type for r in items)
    if kind == "maps":
        return dict(sorted(counts.items()))
    census = {}
    for lam, c in counts.items():
        z = z_of(lam)
        if c % z:
            raise ArithmeticError(f"{c} records of type {lam} are not divisible by z = {z}")
        census[lam] = c // z
    return dict(sorted(census.items()))


def max_unitary_chi(alpha: Partition) -> int:
    return 2 * alpha.length


def unitary_map_series(alpha: Sequence[int], chi_min: int, method: str = "auto") -> LaurentSeries:
    """``(-1)^{l} N^{-(2n+l)} sum_{chi >= chi_min} N^chi sum_maps (-1)^V``.

    Exact through ``N^{-(2n + l - chi_min)}``.
    """
    alpha = as_partition(alpha)
    n, ell = alpha.size, alpha.length
    pi = standard_permutation(alpha)
    terms = {}
    for chi in range(max_unitary_chi(alpha), chi_min - 1, -1):
        if chi % 2:
            continue
        # (-1)^l (-1)^V = (-1)^{l(rho)} since V = l(Pi) = l + l(rho)
        terms[2 * n + ell - chi] = unitary_map_coefficient(pi, chi, method)
    return LaurentSeries.from_terms(terms, 2 * n + ell - chi_min)


# -- orthogonal ----------------------------------------------------------------

@dataclass(frozen=True)
class OrthogonalConfiguration:
    """One element ``(Pi, theta)`` of ``NF(beta, chi)`` with its derived factors."""

    n: int
    m: int
    rho: Permutation
    Pi: Permutation
    theta: Permutation
    f1: Permutation
    f2: Permutation
    chi: int
    chi_literal: int

    @property
    def complement_type(self) -> Partition:
        return Partition(p for p in cycletype(self.rho) if p > 1)

    @property
    def weight(self) -> Fraction:
        """``(1 / z_rho) (-1/2)^{l(Pi)}``."""
        return Fraction(1, z_of(self.complement_type)) * Fraction(-1, 2) ** self.Pi.length

    def check(self) -> None:
        n, size = self.n, self.n + self.m
        p1 = Permutation.from_cycles([(a, -a) for a in range(1, size + 1)], size, True)
        p2 = _p2(self.Pi)
        Pi_h = _embed(self.Pi)
        assert (self.theta * self.theta).is_identity(), "theta is not an involution"
        assert all(self.theta(x) != x for x in self.theta.labels()), "theta has a fixed point"
        assert self.f1 == self.theta * p1 and self.f2 == p2 * self.theta
        assert is_palindromic(self.f1), "f1 is not palindromic"
        target = Pi_h * hat(Pi_h)
        assert self.f2 * self.f1 == target and p2 * p1 == target
        for f in (self.f1, self.f2):
            for cyc in f.cycles():
                assert sum(1 for x in cyc if abs(x) <= n) == 1, f"cycle {cyc} breaks the marking condition"
        assert self.f1.length == self.f2.length == 2 * n
        # f1 cycles come in hat-pairs
        cycs = {frozenset(c) for c in self.f1.cycles()}
        assert all(frozenset(-x for x in c) in cycs for c in cycs)
        assert self.chi == self.Pi.length - size + (self.f1.length + self.f2.length) // 2
        assert self.chi_literal == self.Pi.length - self.m - n + self.f1.length + self.f2.length

    def to_json(self) -> dict:
        return {
            "group": "orthogonal",
            "n": self.n,
            "m": self.m,
            "rho": self.rho.to_string(machine=True),
            "complement_type": str(self.complement_type),
            "Pi": self.Pi.to_string(machine=True),
            "theta": self.theta.to_string(machine=True),
            "f1": self.f1.to_string(machine=True),
            "f2": self.f2.to_string(machine=True),
            "chi": self.chi,
            "chi_literal": self.chi_literal,
        }


def _embed(Pi: Permutation) -> Permutation:
    size = Pi.size
    return Permutation(list(Pi.images) + list(range(size, 2 * size)), True)


def _p2(Pi: Permutation) -> Permutation:
    """Involution pairing ``a^`` with ``Pi(a)``."""
    size = Pi.size
    images = [0] * (2 * size)
    for a in range(size):
        images[size + a] = Pi.images[a]
        images[Pi.images[a]] = size + a
    return Permutation(images, True)


def _orthogonal_search(pi_images: Sequence[int], rho: Partition) -> Iterator[list[int]]:
    """Yield ``theta`` image arrays for fixed ``Pi = pi rho`` (indices: a, then E + a for hats)."""
    n = len(pi_images)
    size = n + rho.size
    total = 2 * size
    Pi = list(pi_images) + [n + x for x in _standard_images(rho)]
    p2 = [0] * total
    for a in range(size):
        p2[size + a] = Pi[a]
        p2[Pi[a]] = size + a
    marked = [(x % size) < n for x in range(total)]
    f1 = _Chains(marked)
    f2 = _Chains(marked)
    theta = [-1] * total

    def h(x: int) -> int:
        return x + size if x < size else x - size

    def pair(u: int, v: int) -> int:
        """Link ``theta = (u v)``; returns the number of links made."""
        made = 0
        for chains, y, z in (
            (f1, h(u), v),
            (f1, h(v), u),
            (f2, u, p2[v]),
            (f2, v, p2[u]),
        ):
            if not chains.link(y, z):
                break
            made += 1
        return made

    def unpair(made: int) -> None:
        order = (f1, f1, f2, f2)
        for i in range(made - 1, -1, -1):
            order[i].undo()

    def search(u: int) -> Iterator[None]:
        while u < total and theta[u] >= 0:
            u += 1
        if u == total:
            yield None
            return
        for v in range(u + 1, total):
            if theta[v] >= 0:
                continue
            made = pair(u, v)
            if made == 4:
                theta[u], theta[v] = v, u
                yield from search(u + 1)
                theta[u] = theta[v] = -1
            unpair(made)

    for _ in search(0):
        yield list(theta)


def enumerate_orthogonal(
    beta: Sequence[int], chi: int, max_labels: int = MAX_ORTHOGONAL_LABELS
) -> list[OrthogonalConfiguration]:
    """All of ``NF(beta, chi)``, in deterministic order."""
    beta = as_partition(beta)
    n = beta.size
    pi = standard_permutation(beta)
    types = complement_types(n, beta.length, chi)
    needed = n + max((m for m, _ in types), default=0)
    if needed > max_labels:
        raise EnumerationError(f"NF({beta}, {chi}) needs {needed} unhatted labels > {max_labels}")
    records = []
    for m, rho in types:
        size = n + m
        rho_perm = standard_permutation(rho, offset=n)
        Pi = Permutation(list(pi.images) + [n + x for x in _standard_images(rho)])
        p1 = Permutation([x + size if x < size else x - size for x in range(2 * size)], True)
        p2 = _p2(Pi)
        for th in _orthogonal_search(pi.images, rho):
            theta = Permutation(th, True)
            f1 = theta * p1
            f2 = p2 * theta
            l1, l2 = f1.length, f2.length
            records.append(
                OrthogonalConfiguration(
                    n, m, rho_perm, Pi, theta, f1, f2,
                    chi=Pi.length - size + (l1 + l2) // 2,
                    chi_literal=Pi.length - m - n + l1 + l2,
                )
            )
    records.sort(key=lambda r: (r.m, tuple(-p for p in r.complement_type), r.theta.images))
    return records


def orthogonal_map_coefficient(beta: Sequence[int], chi: int) -> Fraction:
    """``T_chi = sum (1/z_rho) (-1/2)^{l(Pi)}`` over ``NF(beta, chi)``."""
    return sum((r.weight for r in enumerate_orthogonal(beta, chi)), Fraction(0))


def max_orthogonal_chi(beta: Partition) -> int:
    return beta.size + beta.length


def orthogonal_map_series(beta: Sequence[int], chi_min: int) -> LaurentSeries:
    """``(-2)^l N^{-(2n+l)} sum_{chi >= chi_min} N^chi T_chi``."""
    beta = as_partition(beta)
    n, ell = beta.size, beta.length
    terms = {}
    for chi in range(max_orthogonal_chi(beta), chi_min - 1, -1):
        terms[2 * n + ell - chi] = (-2) ** ell * orthogonal_map_coefficient(beta, chi)
    return LaurentSeries.from_terms(terms, 2 * n + ell - chi_min)


def orthogonal_map_census(beta: Sequence[int], chi: int, unoriented: bool = False) -> dict[Partition, int]:
    """Configurations per complement type divided by ``z_rho``.

    With ``unoriented=True`` each count is further divided by
    ``2^{V-1}``, ``V = l(Pi)``, identifying the local orientation choices at
    the vertices of a map.  Both divisions are checked to be exact.
    """
    beta = as_partition(beta)
    counts = Counter(r.complement_type for r in enumerate_orthogonal(beta, chi))
    census = {}
    for lam, c in counts.items():
        div = z_of(lam)
        if unoriented:
            div *= 2 ** (beta.length + lam.length - 1)
        if c % div:
            raise ArithmeticError(f"{c} configurations of type {lam} are not divisible by {div}")
        census[lam] = c // div
    return dict(sorted(census.items()))


def orthogonal_contributions(beta: Sequence[int], chi: int) -> dict[Partition, Fraction]:
    """Signed contribution to the coefficient of ``N^{chi-(2n+l)}`` per complement type."""
    beta = as_partition(beta)
    out: dict[Partition, Fraction] = {}
    for r in enumerate_orthogonal(beta, chi):
        out[r.complement_type] = out.get(r.complement_type, Fraction(0)) + (-2) ** beta.length * r.weight
    return dict(sorted(out.items()))


def cycles_count(images: Sequence[int]) -> int:
    return _cycles_of(images)


# names under which these operations are commonly cited
theorem1_series = unitary_map_series
theorem2_coefficient = unitary_map_coefficient
theorem3_series = orthogonal_map_series
theorem4_coefficient = orthogonal_map_coefficient
