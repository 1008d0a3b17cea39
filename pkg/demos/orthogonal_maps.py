"""Orthogonal Weingarten functions from locally orientable maps.

Shifting the dimension by one makes the orthogonal expansion run over all
integer Euler characteristics.  Each coefficient is a weighted count of
involutions theta that glue a pair of matchings into a surface.
"""

from fractions import Fraction

from weingarten import enumerate_orthogonal, laurent_expand, orthogonal_map_census, orthogonal_map_series
from weingarten.enumeration import orthogonal_contributions, orthogonal_map_coefficient
from weingarten.weingarten import wg_orthogonal, wg_orthogonal_shifted

beta = (2,)
print("Wg^O((2)) at N     :", wg_orthogonal(beta).to_string(factored=True))
print("Wg^O((2)) at N + 1 :", wg_orthogonal_shifted(beta).to_string(factored=True))
print("expanded           :", laurent_expand(wg_orthogonal_shifted(beta), 6))

print("\nsphere-like configurations (chi = 2):")
for record in enumerate_orthogonal(beta, 2):
    print("  theta =", record.theta.to_string(machine=True), " weight", record.weight)

print("\nprojective-plane level (chi = 1):")
print("  oriented census  ", {str(k): v for k, v in orthogonal_map_census(beta, 1).items()})
print("  unoriented census", {str(k): v for k, v in orthogonal_map_census(beta, 1, unoriented=True).items()})
parts = orthogonal_contributions(beta, 1)
print("  contributions    ", {str(k): str(v) for k, v in parts.items()}, "total", sum(parts.values(), Fraction(0)))

for chi in (2, 1, 0):
    print(f"T_{chi} = {orthogonal_map_coefficient(beta, chi)}")
print("series from maps   :", orthogonal_map_series(beta, 0))
