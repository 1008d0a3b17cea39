"""Side-by-side tables of the factorization counts behind Weingarten series,
and the Gaussian moments that feed the integration formulas."""

from weingarten import IndexedProduct, complex_wick_moment, count_table, real_wick_moment
from weingarten.combinatorics import partitions

KMAX = 5

for family in ("monotone", "matching-monotone", "palindromic-monotone"):
    print(f"{family}:")
    for lam in partitions(2) + partitions(3):
        table = count_table(family, lam, KMAX)
        print(f"  {str(lam):>6}  {table.as_list()}")

# proper counts are indexed by (number of factors k, total depth d)
for family in ("proper", "orthogonal-proper"):
    print(f"{family}, nonzero (k, d) entries up to d = 3:")
    for lam in partitions(2):
        table = count_table(family, lam, 3)
        print(f"  {str(lam):>6}  " + "  ".join(f"{k},{d}: {v}" for (k, d), v in table.counts.items()))

# E|Z_11|^4 = 2 / Omega^2 and E M_11^4 = 3 / Omega^2
print("\n<|Z_11|^4>  =", complex_wick_moment(IndexedProduct.parse("1,1;1,1;1,1;1,1", "complex", 2)), "at Omega = 2")
print("<M_11^4>    =", real_wick_moment(IndexedProduct.parse("1,1;1,1;1,1;1,1", "real", 2)), "at Omega = 2")
print("<M_11 M_12> =", real_wick_moment(IndexedProduct.parse("1,1;1,2", "real")))
