"""Partitions, permutations, matchings and the hyperoctahedral group.

Labels
------
Plain permutations act on ``{1, ..., k}``.  Permutations of the hatted
domain ``[n] u [n^]`` act on signed labels: ``a`` stands for ``a`` and
``-a`` for its hatted copy, so the hat of a label is its negation.
Internally every permutation is a dense tuple of images over label
*indices*; for a hatted domain of half-size ``n`` the index of ``a`` is
``a - 1`` and the index of ``-a`` is ``n + a - 1``.

Permutations are multiplied right to left: ``(s * t)(x) == s(t(x))``.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from itertools import permutations as _iter_permutations
from itertools import product as _iter_product
from typing import Iterable, Iterator, Sequence

HAT = "̂"
DEFAULT_HYPEROCTAHEDRAL_BOUND = 6


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls(int(p) for p in re.split(r"[,\s]+", text) if p)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def rank(self) -> int:
        return self.size - self.length

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def as_partition(value) -> Partition:
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return Partition.parse(value)
    if isinstance(value, int):
        return Partition((value,))
    return Partition(value)


def partitions(n: int, min_part: int = 1) -> list[Partition]:
    """All partitions of ``n`` with every part ``>= min_part``.

    The list is in reverse-lexicographic order, e.g. ``(4), (3,1), (2,2),
    (2,1,1), (1,1,1,1)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(remaining: int, largest: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, largest), min_part - 1, -1):
            for rest in gen(remaining - p, p):
                yield (p,) + rest

    return [Partition(p) for p in gen(n, n)]


def z_of(lam: Sequence[int]) -> int:
    """Centralizer order ``prod_j j^{v_j} v_j!``."""
    z = 1
    for part, mult in Counter(lam).items():
        z *= part**mult * math.factorial(mult)
    return z


def class_size(lam: Sequence[int]) -> int:
    return math.factorial(sum(lam)) // z_of(lam)


def hyperoctahedral_order(n: int) -> int:
    return 2**n * math.factorial(n)


def double_coset_size(lam: Sequence[int]) -> int:
    n = sum(lam)
    return hyperoctahedral_order(n) * class_size(lam) * 2 ** (n - len(lam))


class Permutation:
    """Bijection of ``{1..k}`` or of the hatted domain ``[n] u [n^]``."""

    __slots__ = ("images", "hatted", "_hash")

    def __init__(self, images: Sequence[int], hatted: bool = False):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images do not form a bijection")
        if hatted and len(images) % 2:
            raise ValueError("hatted domain must have even size")
        self.images = images
        self.hatted = hatted
        self._hash = hash((images, hatted))

    # -- construction -------------------------------------------------
    @classmethod
    def identity(cls, size: int, hatted: bool = False) -> "Permutation":
        """Identity on ``size`` labels (``2 * size`` labels when hatted)."""
        return cls(range(2 * size if hatted else size), hatted)

    @classmethod
    def from_cycles(
        cls, cycles: Iterable[Sequence[int]], size: int | None = None, hatted: bool = False
    ) -> "Permutation":
        """Build from label cycles; ``size`` is ``k`` (plain) or ``n`` (hatted)."""
        cycles = [tuple(c) for c in cycles]
        labels = [abs(x) for c in cycles for x in c]
        if not hatted and any(x < 0 for c in cycles for x in c):
            raise ValueError("negative label in a plain permutation")
        if size is None:
            size = max(labels, default=0)
        total = 2 * size if hatted else size
        images = list(range(total))
        seen: set[int] = set()
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if x in seen:
                    raise ValueError(f"label {x} repeated in cycles")
                seen.add(x)
                images[_index(x, size, hatted)] = _index(cyc[(i + 1) % len(cyc)], size, hatted)
        return cls(images, hatted)

    @classmethod
    def from_mapping(cls, mapping: dict[int, int], size: int, hatted: bool = False) -> "Permutation":
        total = 2 * size if hatted else size
        images = list(range(total))
        for x, y in mapping.items():
            images[_index(x, size, hatted)] = _index(y, size, hatted)
        return cls(images, hatted)

    @classmethod
    def parse(cls, text: str, size: int | None = None, hatted: bool | None = None) -> "Permutation":
        """Parse cycle notation such as ``"(1 2)(3 4h)"`` or ``"(1 2)(3 4̂)"``."""
        cycles = []
        any_hat = False
        for body in re.findall(r"\(([^()]*)\)", text):
            cyc = []
            for tok in re.split(r"[\s,]+", body.strip()):
                if not tok:
                    continue
                if tok.endswith("h") or tok.endswith(HAT):
                    cyc.append(-int(tok[:-1]))
                    any_hat = True
                else:
                    cyc.append(int(tok))
            if cyc:
                cycles.append(cyc)
        return cls.from_cycles(cycles, size=size, hatted=any_hat if hatted is None else hatted)

    # -- basic queries --------------------------------------------------
    @property
    def size(self) -> int:
        """Number of labels in the domain."""
        return len(self.images)

    @property
    def half(self) -> int:
        """``n`` for a hatted domain, the domain size otherwise."""
        return len(self.images) // 2 if self.hatted else len(self.images)

    def label(self, index: int) -> int:
        return _label(index, self.half, self.hatted)

    def labels(self) -> list[int]:
        return [self.label(i) for i in range(self.size)]

    def __call__(self, x: int) -> int:
        return self.label(self.images[_index(x, self.half, self.hatted)])

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Permutation)
            and self.images == other.images
            and self.hatted == other.hatted
        )

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return (self.hatted, self.images) < (other.hatted, other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, y in enumerate(self.images):
            inv[y] = i
        return Permutation(inv, self.hatted)

    def index_cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.size
        out = []
        for start in range(self.size):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycles(self, include_fixed: bool = True) -> list[tuple[int, ...]]:
        return [
            tuple(self.label(i) for i in c)
            for c in self.index_cycles()
            if include_fixed or len(c) > 1
        ]

    @property
    def length(self) -> int:
        """Number of cycles, fixed points included."""
        return len(self.index_cycles())

    def is_identity(self) -> bool:
        return all(i == y for i, y in enumerate(self.images))

    def to_string(self, machine: bool = False) -> str:
        parts = []
        for cyc in self.cycles(include_fixed=False):
            parts.append("(" + " ".join(_label_str(x, machine) for x in cyc) + ")")
        return "".join(parts) or "()"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Permutation.parse({self.to_string(machine=True)!r}, size={self.half}, hatted={self.hatted})"


def _index(label: int, half: int, hatted: bool) -> int:
    if label > 0 and label <= half:
        return label - 1
    if hatted and label < 0 and -label <= half:
        return half - label - 1
    raise ValueError(f"label {label} outside the domain")


def _label(index: int, half: int, hatted: bool) -> int:
    if index < half:
        return index + 1
    if hatted:
        return -(index - half + 1)
    raise ValueError(f"index {index} outside the domain")


def _label_str(x: int, machine: bool) -> str:
    if x > 0:
        return str(x)
    return f"{-x}h" if machine else f"{-x}{HAT}"


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """Right-to-left product: ``x -> sigma(tau(x))``."""
    if sigma.size != tau.size or sigma.hatted != tau.hatted:
        raise ValueError("cannot compose permutations on different domains")
    s = sigma.images
    return Permutation([s[y] for y in tau.images], sigma.hatted)


def cycletype(sigma: Permutation) -> Partition:
    return Partition(sorted((len(c) for c in sigma.index_cycles()), reverse=True))


def standard_permutation(alpha: Sequence[int], offset: int = 0, size: int | None = None) -> Permutation:
    """Permutation with cycles on consecutive blocks ``(1..a1)(a1+1..)...``.

    ``offset`` shifts the first label to ``offset + 1``; labels below the
    offset are fixed.  ``size`` defaults to ``offset + |alpha|``.
    """
    alpha = as_partition(alpha)
    total = offset + alpha.size if size is None else size
    images = list(range(total))
    start = offset
    for part in alpha:
        for i in range(part):
            images[start + i] = start + (i + 1) % part
        start += part
    return Permutation(images)


# -- hat involution -------------------------------------------------------

def hat_label(x: int) -> int:
    return -x


def hat(sigma: Permutation) -> Permutation:
    """The hat involution ``a -> (sigma^{-1}(a^))^``, i.e. ``h sigma^{-1} h``."""
    if not sigma.hatted:
        raise ValueError("hat is only defined on the hatted domain")
    n = sigma.half
    h = [i + n if i < n else i - n for i in range(2 * n)]
    inv = [0] * (2 * n)
    for i, y in enumerate(sigma.images):
        inv[y] = i
    return Permutation([h[inv[h[i]]] for i in range(2 * n)], True)


def is_palindromic(sigma: Permutation) -> bool:
    return hat(sigma) == sigma


def embed_hatted(sigma: Permutation) -> Permutation:
    """View a plain permutation of ``{1..n}`` on ``[n] u [n^]`` (hats fixed)."""
    if sigma.hatted:
        return sigma
    n = sigma.size
    return Permutation(list(sigma.images) + list(range(n, 2 * n)), True)


# -- matchings -------------------------------------------------------------

class Matching:
    """Perfect matching of ``[n] u [n^]`` stored as a frozenset of pairs."""

    __slots__ = ("n", "blocks", "_partner")

    def __init__(self, blocks: Iterable[Iterable[int]], n: int | None = None):
        blocks = frozenset(frozenset(b) for b in blocks)
        labels = [x for b in blocks for x in b]
        if n is None:
            n = len(blocks)
        expected = set(range(1, n + 1)) | set(range(-n, 0))
        if any(len(b) != 2 for b in blocks) or len(labels) != 2 * n or set(labels) != expected:
            raise ValueError("blocks do not form a perfect matching of [n] u [n^]")
        self.n = n
        self.blocks = blocks
        partner = {}
        for b in blocks:
            x, y = tuple(b)
            partner[x] = y
            partner[y] = x
        self._partner = partner

    @classmethod
    def trivial(cls, n: int) -> "Matching":
        return cls([(a, -a) for a in range(1, n + 1)], n)

    def partner(self, x: int) -> int:
        return self._partner[x]

    def sorted_blocks(self) -> list[tuple[int, int]]:
        key = _label_key
        return sorted((tuple(sorted(b, key=key)) for b in self.blocks), key=lambda b: [key(x) for x in b])

    def to_involution(self) -> Permutation:
        return Permutation.from_cycles(self.sorted_blocks(), size=self.n, hatted=True)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matching) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def to_string(self, machine: bool = False) -> str:
        return "{" + ", ".join(
            "{" + ",".join(_label_str(x, machine) for x in b) + "}" for b in self.sorted_blocks()
        ) + "}"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Matching({self.sorted_blocks()!r})"


def _label_key(x: int) -> tuple[int, int]:
    return (abs(x), 0 if x > 0 else 1)


def matchings(n: int) -> list[Matching]:
    """All ``(2n-1)!!`` perfect matchings of ``[n] u [n^]``."""
    labels = sorted([a for a in range(1, n + 1)] + [-a for a in range(1, n + 1)], key=_label_key)

    def gen(items: list[int]) -> Iterator[list[tuple[int, int]]]:
        if not items:
            yield []
            return
        first = items[0]
        for i in range(1, len(items)):
            rest = items[1:i] + items[i + 1:]
            for tail in gen(rest):
                yield [(first, items[i])] + tail

    return [Matching(blocks, n) for blocks in gen(labels)]


def act_on_matching(sigma: Permutation, m: Matching) -> Matching:
    """Replace every block ``{a, b}`` by ``{sigma(a), sigma(b)}``."""
    if not sigma.hatted or sigma.half != m.n:
        raise ValueError("permutation and matching live on different domains")
    return Matching([(sigma(a), sigma(b)) for a, b in (tuple(b) for b in m.blocks)], m.n)


def coset_type(m1: Matching, m2: Matching | None = None) -> Partition:
    """Cosettype of the union graph of two matchings (``m2`` defaults to trivial)."""
    if m2 is None:
        m2 = Matching.trivial(m1.n)
    if m1.n != m2.n:
        raise ValueError("matchings of different sizes")
    seen: set[int] = set()
    parts = []
    for start in m1._partner:
        if start in seen:
            continue
        count = 0
        x = start
        while True:
            seen.add(x)
            y = m1.partner(x)
            seen.add(y)
            count += 1
            x = m2.partner(y)
            if x == start:
                break
        parts.append(count)
    return Partition(sorted(parts, reverse=True))


def permutation_coset_type(sigma: Permutation) -> Partition:
    """Cosettype of the matching produced by ``sigma``."""
    return coset_type(act_on_matching(sigma, Matching.trivial(sigma.half)))


def standard_matching(beta: Sequence[int]) -> Matching:
    """Matching of cosettype ``beta``: blocks ``{a_i, a_{i+1}^}`` cycling in each part."""
    beta = as_partition(beta)
    blocks = []
    start = 1
    for part in beta:
        for i in range(part):
            blocks.append((start + i, -(start + (i + 1) % part)))
        start += part
    return Matching(blocks, beta.size)


def coset_representative(beta: Sequence[int]) -> Permutation:
    """A permutation of ``[n] u [n^]`` producing ``standard_matching(beta)``.

    It fixes unhatted labels and rotates the hatted labels inside each part.
    """
    beta = as_partition(beta)
    n = beta.size
    images = list(range(2 * n))
    start = 0
    for part in beta:
        for i in range(part):
            images[n + start + i] = n + start + (i + 1) % part
        start += part
    return Permutation(images, True)


def hyperoctahedral_elements(n: int, bound: int = DEFAULT_HYPEROCTAHEDRAL_BOUND) -> list[Permutation]:
    """All ``2^n n!`` permutations of ``[n] u [n^]`` fixing the trivial matching."""
    if n > bound:
        raise ValueError(f"hyperoctahedral group H_{n} exceeds the bound {bound}")
    out = []
    for w in _iter_permutations(range(n)):
        for flips in _iter_product((False, True), repeat=n):
            images = [0] * (2 * n)
            for a in range(n):
                lo, hi = w[a], w[a] + n
                if flips[a]:
                    lo, hi = hi, lo
                images[a] = lo
                images[a + n] = hi
            out.append(Permutation(images, True))
    return out


def all_permutations(k: int, hatted: bool = False) -> Iterator[Permutation]:
    total = 2 * k if hatted else k
    for images in _iter_permutations(range(total)):
        yield Permutation(images, hatted)
