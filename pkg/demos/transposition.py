"""The unitary Weingarten function of a transposition, three ways.

1. As an exact rational function of N.
2. As a Laurent series whose coefficients count monotone factorizations.
3. As a signed count of maps, genus by genus.
"""

from weingarten import laurent_expand, unitary_map_census, unitary_map_coefficient, unitary_map_series, wg_unitary
from weingarten.combinatorics import standard_permutation
from weingarten.counts import monotone_counts

alpha = (2,)
wg = wg_unitary(alpha)
print("Wg^U((2)) =", wg.to_string(), "=", wg.to_string(factored=True))

series = laurent_expand(wg, 9)
print("expanded   :", series)

# coefficient of N^-(n+k) is (-1)^k times the number of monotone k-step walks
table = monotone_counts(alpha, 6)
print("monotone   :", table.as_list())

# every even Euler characteristic contributes one coefficient
pi = standard_permutation(alpha)
for chi in (2, 0, -2):
    census = unitary_map_census(pi, chi)
    shown = ", ".join(f"{rho}: {count}" for rho, count in census.items()) or "none"
    print(f"chi={chi:3d}  coefficient {unitary_map_coefficient(pi, chi)!s:>4}  maps by complement type {{{shown}}}")

print("from maps  :", unitary_map_series(alpha, -2))
