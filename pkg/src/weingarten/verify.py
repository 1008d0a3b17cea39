"""Acceptance checks with computed and expected values side by side.

Each check returns a :class:`CheckResult`; reports contain no timings so
they are byte-identical between runs (cold or warm cache).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import N, RationalFunction, format_fraction, laurent_expand
from .combinatorics import Permutation, partitions
from .counts import (
    calibrate_order_convention,
    matching_monotone_counts,
    matching_monotone_series,
    monotone_counts,
    monotone_series,
    orthogonal_proper_series,
    palindromic_monotone_counts,
    palindromic_monotone_series,
    proper_alternating_sum,
    proper_count,
)
from .enumeration import (
    enumerate_orthogonal,
    enumerate_unitary,
    orthogonal_contributions,
    orthogonal_map_census,
    sum_rule_value,
    unitary_map_series,
    unitary_map_coefficient,
    orthogonal_map_series,
    orthogonal_map_coefficient,
    unitary_map_census,
)
from .weingarten import gram_wg_orthogonal, gram_wg_unitary, wg_orthogonal, wg_orthogonal_shifted, wg_unitary
from .wick import IndexedProduct, complex_wick_moment, real_wick_moment


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    computed: dict
    expected: dict
    budget_seconds: float
    tags: tuple[str, ...] = ("desk",)
    flags: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.passed,
            "computed": self.computed,
            "expected": self.expected,
            "budget_seconds": self.budget_seconds,
            "tags": list(self.tags),
            "flags": self.flags,
        }


def _series_list(series, lo, hi) -> list[str]:
    return [format_fraction(series.coefficient(k)) for k in range(lo, hi + 1)]


def closed_forms() -> CheckResult:
    u = wg_unitary((2,))
    o = wg_orthogonal((2,))
    expected_u = RationalFunction(-1, (N - 1) * N * (N + 1))
    expected_o = RationalFunction(-1, (N - 1) * N * (N + 2))
    return CheckResult(
        1, "closed forms", u == expected_u and o == expected_o,
        {"unitary": u.to_string(factored=True), "orthogonal": o.to_string(factored=True)},
        {"unitary": expected_u.to_string(factored=True), "orthogonal": expected_o.to_string(factored=True)},
        1,
    )


def series_coefficients() -> CheckResult:
    u = _series_list(laurent_expand(wg_unitary((2,)), 7), 3, 7)
    o = _series_list(laurent_expand(wg_orthogonal_shifted((2,)), 5), 3, 5)
    eu, eo = ["-1", "0", "-1", "0", "-1"], ["-1", "4", "-13"]
    return CheckResult(2, "Laurent coefficients", u == eu and o == eo,
                       {"unitary": u, "orthogonal_shifted": o}, {"unitary": eu, "orthogonal_shifted": eo}, 1)


def oracle_equivalence() -> CheckResult:
    mismatches = []
    checked = 0
    for n in range(1, 5):
        for alpha in partitions(n):
            f = wg_unitary(alpha)
            for dim in (n, n + 1, n + 2):
                checked += 1
                if f(dim) != gram_wg_unitary(alpha, dim):
                    mismatches.append(f"U {alpha} N={dim}")
    for n in range(1, 4):
        for beta in partitions(n):
            f = wg_orthogonal(beta)
            for dim in (2 * n, 2 * n + 1):
                checked += 1
                if f(dim) != gram_wg_orthogonal(beta, dim):
                    mismatches.append(f"O {beta} N={dim}")
    return CheckResult(3, "character route equals Gram oracle", not mismatches,
                       {"checked": checked, "mismatches": mismatches}, {"mismatches": []}, 30)


def monotone_identity() -> CheckResult:
    bad = []
    for n in range(1, 4):
        for alpha in partitions(n):
            order = n + 8
            if not monotone_series(alpha, order).agrees_with(laurent_expand(wg_unitary(alpha), order)):
                bad.append(str(alpha))
    return CheckResult(4, "monotone expansion", not bad,
                       {"disagreeing": bad, "m_2": [str(c) for c in monotone_counts((2,), 8).as_list()]},
                       {"disagreeing": []}, 30)


def unitary_enumeration() -> CheckResult:
    pi = Permutation.parse("(1 2)")
    top = enumerate_unitary(pi, 2)
    example = (Permutation.parse("(1 4)(2 3)"), Permutation.parse("(1 3)(2 4)"))
    has_example = any((r.tau1, r.tau2) == example for r in top)
    s2 = unitary_map_coefficient(pi, 2)
    census = unitary_map_census(pi, 0)
    s0 = unitary_map_coefficient(pi, 0)
    series = unitary_map_series((2,), 0)
    target = laurent_expand(wg_unitary((2,)), 5)
    computed = {
        "records_chi2": len(top),
        "contains_example": has_example,
        "S2": format_fraction(s2),
        "census_chi0": {str(k): v for k, v in census.items()},
        "S0": format_fraction(s0),
        "series": _series_list(series, 3, 5),
    }
    expected = {
        "records_chi2": 2,
        "contains_example": True,
        "S2": "-1",
        "census_chi0": {"2,2,2": 21, "3,2": 28, "4": 8},
        "S0": "-1",
        "series": _series_list(target, 3, 5),
    }
    return CheckResult(5, "unitary factorization enumeration", computed == expected, computed, expected, 120)


def sum_rule() -> CheckResult:
    rows, flags = [], []
    ok = True
    for n in range(1, 4):
        for alpha in partitions(n):
            ell = alpha.length
            for chi in range(2 * ell, 2 * ell - 5, -2):
                k = n + ell - chi
                value = sum_rule_value(alpha, chi, method="maps")
                m = monotone_counts(alpha, k)[k]
                derived = (-1) ** n * m
                alternate = (-1) ** (n + ell) * m
                ok &= abs(value) == m and value == derived
                if value != alternate:
                    flags.append(f"alpha={alpha} chi={chi}: value {value}, not (-1)^(n+l) M = {alternate}")
                rows.append({"alpha": str(alpha), "chi": chi, "value": format_fraction(value), "M": m})
    expected = [{"alpha": r["alpha"], "chi": r["chi"],
                 "value": str((-1) ** sum(map(int, r["alpha"].split(","))) * r["M"]), "M": r["M"]} for r in rows]
    return CheckResult(6, "sum rule against monotone counts", ok, {"rows": rows}, {"rows": expected}, 300,
                       tags=("long",), flags=flags)


EXAMPLE_THETA = "(1 3h)(2 4h)(4 2h)(3 1h)"


def orthogonal_enumeration() -> CheckResult:
    top = enumerate_orthogonal((2,), 2)
    theta = Permutation.parse(EXAMPLE_THETA, size=4, hatted=True)
    pis = sorted({r.Pi.to_string(machine=True) for r in top})
    census = orthogonal_map_census((2,), 1)
    unoriented = orthogonal_map_census((2,), 1, unoriented=True)
    contributions = orthogonal_contributions((2,), 1)
    series = orthogonal_map_series((2,), 0)
    target = laurent_expand(wg_orthogonal_shifted((2,)), 5)
    computed = {
        "configurations_chi2": len(top),
        "Pi_chi2": pis,
        "contains_example": any(r.theta == theta for r in top),
        "T2": format_fraction(orthogonal_map_coefficient((2,), 2)),
        "T1": format_fraction(orthogonal_map_coefficient((2,), 1)),
        "T0": format_fraction(orthogonal_map_coefficient((2,), 0)),
        "series": _series_list(series, 3, 5),
        "census_chi1_unoriented_total": sum(unoriented.values()),
        "contribution_chi1": format_fraction(sum(contributions.values(), Fraction(0))),
    }
    expected = {
        "configurations_chi2": 4,
        "Pi_chi2": ["(1 2)(3 4)"],
        "contains_example": True,
        "T2": "1/2",
        "T1": "-2",
        "T0": "13/2",
        "series": _series_list(target, 3, 5),
        "census_chi1_unoriented_total": 12,
        "contribution_chi1": "4",
    }
    flags = [
        "per-z census at chi=1 is " + ", ".join(f"{k}: {v}" for k, v in census.items())
        + f" (total {sum(census.values())}); 12 is reached after identifying vertex orientations"
    ]
    return CheckResult(7, "orthogonal configuration enumeration", computed == expected, computed, expected, 600,
                       tags=("long",), flags=flags)


def monotone_variants() -> CheckResult:
    conv = calibrate_order_convention()
    mm = [matching_monotone_counts((2,), 4)[k] for k in range(1, 5)]
    pm = [palindromic_monotone_counts((2,), 3, conv)[k] for k in range(1, 4)]
    mm_ok = matching_monotone_series((2,), 6).agrees_with(laurent_expand(wg_orthogonal((2,)), 6))
    pm_ok = palindromic_monotone_series((2,), 5, conv).agrees_with(laurent_expand(wg_orthogonal_shifted((2,)), 5))
    computed = {"matching_monotone": mm, "palindromic_monotone": pm, "matching_series": mm_ok,
                "palindromic_series": pm_ok, "convention": conv.name}
    expected = {"matching_monotone": [1, 1, 3, 5], "palindromic_monotone": [1, 4, 13], "matching_series": True,
                "palindromic_series": True, "convention": conv.name}
    return CheckResult(8, "matching and palindromic monotone counts", computed == expected, computed, expected, 60)


def proper_identities() -> CheckResult:
    bad = []
    for n in range(1, 4):
        for alpha in partitions(n):
            for d in range(0, 5):
                for k in range(0, d + 1):
                    proper_count(alpha, k, d)  # raises on non-integral values
                m = monotone_counts(alpha, d)[d]
                if proper_alternating_sum(alpha, d) != (-1) ** (n + alpha.length) * m:
                    bad.append(f"alpha={alpha} d={d}")
    for n in range(1, 3):
        for beta in partitions(n):
            order = n + 3
            if not orthogonal_proper_series(beta, order).agrees_with(laurent_expand(wg_orthogonal(beta), order)):
                bad.append(f"orthogonal beta={beta}")
    return CheckResult(9, "proper factorization identities", not bad, {"failures": bad}, {"failures": []}, 120)


def _exz_template(a1, b1, d1, c1, a2, b2, d2, c2) -> Fraction:
    t1 = a1 == d1 and b1 == c1 and a2 == d2 and b2 == c2
    t2 = a1 == d2 and b1 == c2 and a2 == d1 and b2 == c1
    return Fraction(int(t1) + int(t2))


def _exm_template(a, b) -> Fraction:
    terms = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]
    return Fraction(sum(1 for (p, q), (r, s) in terms
                        if a[p] == a[q] and a[r] == a[s] and b[p] == b[q] and b[r] == b[s]))


def wick_templates() -> CheckResult:
    from itertools import product

    bad = 0
    total = 0
    for idx in product((1, 2), repeat=8):
        a1, b1, d1, c1, a2, b2, d2, c2 = idx
        # Z^dag_{c d} = Z*_{d c}
        p = IndexedProduct([(a1, b1, "Z"), (d1, c1, "Zbar"), (a2, b2, "Z"), (d2, c2, "Zbar")])
        total += 1
        bad += complex_wick_moment(p) != _exz_template(*idx)
        a, b = idx[:4], idx[4:]
        q = IndexedProduct([(a[i], b[i], "M") for i in range(4)])
        total += 1
        bad += real_wick_moment(q) != _exm_template(a, b)
    return CheckResult(10, "Wick templates", bad == 0, {"assignments": total, "mismatches": bad},
                       {"assignments": 512, "mismatches": 0}, 1)


CHECKS: tuple[Callable[[], CheckResult], ...] = (
    closed_forms,
    series_coefficients,
    oracle_equivalence,
    monotone_identity,
    unitary_enumeration,
    sum_rule,
    orthogonal_enumeration,
    monotone_variants,
    proper_identities,
    wick_templates,
)

LONG_CHECKS = (sum_rule, orthogonal_enumeration)
SUITES = ("small", "full")


def run_suite(suite: str = "small") -> list[CheckResult]:
    """``small`` runs the checks tagged ``desk``; ``full`` runs all of them."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    return [check() for check in CHECKS if suite == "full" or check not in LONG_CHECKS]
