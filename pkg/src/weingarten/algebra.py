"""Exact polynomials and rational functions of the dimension ``N``.

Scalars are :class:`fractions.Fraction`.  Polynomials are dense coefficient
tuples in ascending degree; rational functions are kept reduced with a
monic denominator so that equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def format_fraction(x: Fraction) -> str:
    x = _frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


class Polynomial:
    """Univariate polynomial in ``N`` with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1) -> "Polynomial":
        p = cls([lead])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "Polynomial":
        other = _poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-x for x in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        return self + (-_poly(other))

    def __rsub__(self, other) -> "Polynomial":
        return _poly(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = _poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.coeffs
        for i in range(len(rem) - len(d), -1, -1):
            factor = rem[i + len(d) - 1] / d[-1]
            if factor:
                q[i] = factor
                for j, y in enumerate(d):
                    rem[i + j] -= factor * y
        return Polynomial(q), Polynomial(rem)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        x = _frac(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.lead
        return Polynomial([c / lead for c in self.coeffs])

    def shift(self, s: Scalar) -> "Polynomial":
        """Return ``p(N + s)``."""
        s = _frac(s)
        out = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j in range(k + 1):
                out[j] += c * comb(k, j) * s ** (k - j)
        return Polynomial(out)

    def integer_roots(self) -> list[int] | None:
        """Roots with multiplicity if the polynomial splits over the integers."""
        if self.degree <= 0:
            return [] if self.degree == 0 else None
        p = self
        roots: list[int] = []
        while p.degree > 0:
            # clear denominators, then apply the rational root test on integers
            scale = lcm(*(c.denominator for c in p.coeffs))
            ints = [int(c * scale) for c in p.coeffs]
            k = next(i for i, c in enumerate(ints) if c != 0)
            if k:
                roots.extend([0] * k)
                p = Polynomial(p.coeffs[k:])
                continue
            c0 = abs(ints[0])
            found = None
            for d in _divisors(c0):
                for r in (d, -d):
                    if p(r) == 0:
                        found = r
                        break
                if found is not None:
                    break
            if found is None:
                return None
            roots.append(found)
            p, _ = p.divmod(Polynomial([-found, 1]))
        return sorted(roots)

    def to_string(self, var: str = "N") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = format_fraction(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{format_fraction(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({[format_fraction(c) for c in self.coeffs]})"


def _divisors(n: int) -> list[int]:
    if n == 0:
        return [0]
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial([x])
    raise TypeError(f"cannot coerce {type(x).__name__} to Polynomial")


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm over Q."""
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic()


N = Polynomial([0, 1])


class RationalFunction:
    """Reduced quotient of polynomials in ``N`` with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _poly(num)
        den = Polynomial([1]) if den is None else _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Polynomial(), Polynomial([1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, _ = num.divmod(g)
            den, _ = den.divmod(g)
        lead = den.lead
        self.num = Polynomial([c / lead for c in num.coeffs])
        self.den = den.monic()

    @classmethod
    def from_roots(cls, numerator: Scalar, roots: Iterable[int]) -> "RationalFunction":
        """``numerator / prod (N - r)``."""
        return cls(Polynomial([numerator]), Polynomial.from_roots(roots))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction(other)
        return isinstance(other, RationalFunction) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other) -> "RationalFunction":
        other = _rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-_rf(other))

    def __rsub__(self, other) -> "RationalFunction":
        return _rf(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = _rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return _rf(other) / self

    def __call__(self, x: Scalar) -> Fraction:
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at N={x}")
        return self.num(x) / d

    def shift(self, s: int) -> "RationalFunction":
        return substitute_shift(self, s)

    def to_string(self, factored: bool = False) -> str:
        num = self.num.to_string()
        if self.den.degree == 0:
            return num
        if factored:
            den = _factored(self.den)
            if den is not None:
                return f"{_wrap(num)}/{den}"
        return f"{_wrap(num)}/({self.den.to_string()})"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_string()!r})"


def _wrap(s: str) -> str:
    return f"({s})" if (" " in s or "*" in s or "N" in s) else s


def _factored(den: Polynomial) -> str | None:
    roots = den.integer_roots()
    if roots is None:
        return None
    factors = []
    for r in sorted(roots, reverse=True):
        factors.append("N" if r == 0 else (f"(N-{r})" if r > 0 else f"(N+{-r})"))
    body = "".join(factors)
    return body if len(factors) == 1 and body == "N" else f"({body})"


def _rf(x) -> RationalFunction:
    return x if isinstance(x, RationalFunction) else RationalFunction(_poly(x))


def substitute_shift(f: RationalFunction, shift: int) -> RationalFunction:
    """``f(N + shift)`` as a reduced rational function."""
    if shift == 0:
        return f
    return RationalFunction(f.num.shift(shift), f.den.shift(shift))


@dataclass(frozen=True)
class LaurentSeries:
    """Truncated expansion ``sum_k c_k N^{-k}`` for ``leading_exponent <= k <= order``.

    ``coefficients[i]`` multiplies ``N^{-(leading_exponent + i)}``.
    """

    leading_exponent: int
    coefficients: tuple[Fraction, ...]
    order: int

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of ``N^{-k}``; raises beyond the truncation order."""
        if k > self.order:
            raise ValueError(f"N^-{k} is beyond the truncation order {self.order}")
        i = k - self.leading_exponent
        if i < 0 or i >= len(self.coefficients):
            return Fraction(0)
        return self.coefficients[i]

    def terms(self) -> dict[int, Fraction]:
        return {self.leading_exponent + i: c for i, c in enumerate(self.coefficients) if c != 0}

    def agrees_with(self, other: "LaurentSeries", order: int | None = None) -> bool:
        top = min(self.order, other.order) if order is None else order
        lo = min(self.leading_exponent, other.leading_exponent)
        return all(self.coefficient(k) == other.coefficient(k) for k in range(lo, top + 1))

    def to_json(self) -> dict:
        return {
            "leading_exponent": self.leading_exponent,
            "coefficients": [format_fraction(c) for c in self.coefficients],
            "order": self.order,
        }

    @classmethod
    def from_terms(cls, terms: dict[int, Scalar], order: int) -> "LaurentSeries":
        """Build from ``{k: coefficient of N^-k}``, dropping terms beyond ``order``."""
        kept = {k: _frac(c) for k, c in terms.items() if k <= order and c != 0}
        if not kept:
            return cls(order, (), order)
        lo = min(kept)
        return cls(lo, tuple(kept.get(k, Fraction(0)) for k in range(lo, order + 1)), order)

    def __str__(self) -> str:
        parts = []
        for k, c in sorted(self.terms().items()):
            power = f"N^-{k}" if k else "1"
            if abs(c) == 1 and k:
                parts.append(("-" if c < 0 else "") + power)
            else:
                parts.append(f"{format_fraction(c)}*{power}" if k else format_fraction(c))
        parts.append(f"O(N^-{self.order + 1})")
        return " + ".join(parts).replace("+ -", "- ")


def laurent_expand(f: RationalFunction, order: int) -> LaurentSeries:
    """Expand ``f`` in powers of ``1/N`` through ``N^{-order}``.

    The coefficients are reversed and divided as power series in ``x = 1/N``.
    """
    if f.is_zero():
        return LaurentSeries(order, (), order)
    p, q = f.num.coeffs, f.den.coeffs
    lead_exp = len(q) - len(p)
    if order < lead_exp:
        raise ValueError(f"order {order} is below the leading exponent {lead_exp}")
    a = list(reversed(p))
    b = list(reversed(q))
    count = order - lead_exp + 1
    out: list[Fraction] = []
    for k in range(count):
        acc = a[k] if k < len(a) else Fraction(0)
        for j in range(1, min(k, len(b) - 1) + 1):
            acc -= b[j] * out[k - j]
        out.append(acc / b[0])
    return LaurentSeries(lead_exp, tuple(out), order)


def solve_integer_system(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction]:
    """Solve ``A x = b`` for an integer matrix with fraction-free elimination.

    Forward elimination uses Bareiss' update so intermediate entries stay
    integers; back substitution is done over the rationals.
    """
    n = len(matrix)
    m = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    prev = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
        mk = m[k]
        pk = mk[k]
        for i in range(k + 1, n):
            mi = m[i]
            aik = mi[k]
            for j in range(k + 1, n + 1):
                mi[j] = (pk * mi[j] - aik * mk[j]) // prev
            mi[k] = 0
        prev = pk
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(m[i][n])
        for j in range(i + 1, n):
            acc -= m[i][j] * x[j]
        x[i] = acc / m[i][i]
    return x
