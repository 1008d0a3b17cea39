"""Exact Gaussian moments of Ginibre matrix elements by Wick pairing.

Weights are ``exp(-Omega Tr Z Z^dag)`` for complex and
``exp(-Omega/2 Tr M M^T)`` for real matrices, so a single covariance is
``1/Omega`` in both cases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable


TAGS = ("Z", "Zbar", "M")
MAX_FACTORS = 12


@dataclass(frozen=True)
class Factor:
    row: int
    col: int
    tag: str = "M"

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown tag {self.tag!r}")


@dataclass(frozen=True)
class IndexedProduct:
    """A product of matrix elements, each ``(row, col, tag)``."""

    factors: tuple[Factor, ...]
    omega: Fraction = field(default=Fraction(1))

    def __init__(self, factors: Iterable, omega=1):
        fs = []
        for f in factors:
            fs.append(f if isinstance(f, Factor) else Factor(*f))
        object.__setattr__(self, "factors", tuple(fs))
        object.__setattr__(self, "omega", Fraction(omega))
        if self.omega <= 0:
            raise ValueError("omega must be positive")
        if len(fs) > MAX_FACTORS:
            raise ValueError(f"at most {MAX_FACTORS} factors are supported")

    @classmethod
    def parse(cls, text: str, kind: str = "real", omega=1) -> "IndexedProduct":
        """``"1,1;1,1"`` style input.

        For ``kind="complex"`` factors alternate ``Z, Zbar, Z, Zbar, ...``
        unless a tag is given explicitly, e.g. ``"1,2,Z;2,1,Zbar"``.
        """
        factors = []
        for i, chunk in enumerate(c for c in text.split(";") if c.strip()):
            bits = [b.strip() for b in chunk.split(",")]
            if len(bits) not in (2, 3):
                raise ValueError(f"cannot parse factor {chunk!r}")
            row, col = int(bits[0]), int(bits[1])
            if len(bits) == 3:
                tag = bits[2]
            elif kind == "complex":
                tag = "Z" if i % 2 == 0 else "Zbar"
            elif kind == "real":
                tag = "M"
            else:
                raise ValueError(f"unknown kind {kind!r}")
            factors.append(Factor(row, col, tag))
        return cls(factors, omega)


def _check_tags(p: IndexedProduct, allowed: set[str]) -> None:
    bad = {f.tag for f in p.factors} - allowed
    if bad:
        raise ValueError(f"tags {sorted(bad)} are not allowed here")


def complex_wick_moment(p: IndexedProduct) -> Fraction:
    """``<prod Z prod Z*>``: sum over bijections from ``Z`` factors to ``Z*`` factors."""
    _check_tags(p, {"Z", "Zbar"})
    zs = [f for f in p.factors if f.tag == "Z"]
    zbars = [f for f in p.factors if f.tag == "Zbar"]
    if len(zs) != len(zbars):
        return Fraction(0)
    n = len(zs)
    count = 0
    for perm in permutations(range(n)):
        if all(zs[k].row == zbars[perm[k]].row and zs[k].col == zbars[perm[k]].col for k in range(n)):
            count += 1
    return Fraction(count) / p.omega**n


def real_wick_moment(p: IndexedProduct) -> Fraction:
    """``<prod M>``: sum over perfect matchings of the factors."""
    _check_tags(p, {"M"})
    size = len(p.factors)
    if size % 2:
        return Fraction(0)
    n = size // 2
    rows = [f.row for f in p.factors]
    cols = [f.col for f in p.factors]
    count = 0
    for pairs in _pairings(list(range(size))):
        if all(rows[a] == rows[b] and cols[a] == cols[b] for a, b in pairs):
            count += 1
    return Fraction(count) / p.omega**n


def _pairings(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for tail in _pairings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + tail

