"""
Algebras generated in two degrees
=================================

Build the universal algebra for a two-generator presentation, specialise it
over a finite field, and read the parameters back from the multiplication table.
"""

from gcl.abelian_group import identity_hom, two_gen_group
from gcl.catalog import lambda_delta, qbar_invariants
from gcl.graded_algebra import h_data, qbar_of, universal_table, universal_two_gen_algebra, verify
from gcl.rings import GF

# Z/4 generated by m = e1 and n = e2, with 1*e1 = 3*e2, and qbar = 2.
r, alpha, N, qbar = 1, 3, 4, 2
inv = qbar_invariants(r, alpha, N, qbar)
print("z, y, x, w =", (inv.z, inv.y, inv.x, inv.w))

# %%
# Rewriting puts every product of basis monomials s^i t^j back into normal form.
tab = universal_table(r, alpha, N, qbar)
for idx, (i, j) in sorted(tab.basis.items()):
    print(f"  degree {tab.group.elements[idx].serialize()}: s^{i} t^{j}")

# %%
# The exponents of a and b in the structure constants are two rays on the group.
lam, dlt = lambda_delta(r, alpha, N, qbar, identity_hom(tab.group))
print("a-exponents match:", tuple(e[0] for e in tab.exponents) == lam.values)
print("b-exponents match:", tuple(e[1] for e in tab.exponents) == dlt.values)

# %%
# Specialise a = 1, b = 0 over F_7 and recover qbar and lambda.
F7 = GF(7)
alg = universal_two_gen_algebra(r, alpha, N, qbar, 1, 0, F7)
print("associative:", not verify(alg), "h =", h_data(alg).h)
tg = two_gen_group(r, alpha, N)
res = qbar_of(alg, tg.e1, tg.e2)
print(f"recovered z = {res.z}, qbar = {res.qbar}, lambda = {res.lam}")
