"""
Local data of S3-covers
=======================

Check the regular representation, sample the charts, and pass between
S3 data and triple covers.
"""

import random
from fractions import Fraction

from gcl.rings import QQ
from gcl.s3 import (
    SurfaceNumbers,
    TripleCoverData,
    component_membership,
    discriminant,
    dual_number_datum,
    from_triple_cover,
    quotient_by_sigma,
    regular_representation,
    surface_invariants,
    triple_discriminant,
    u_beta_chart,
    verify_s3,
)

reg = regular_representation()
print("regular representation verifies:", verify_s3(reg) == [])
print("discriminant:", discriminant(reg))

# %%
# A datum over the dual numbers with nonzero trace: the equations hold but the
# point is off the main component.
dn = dual_number_datum()
print("dual-number datum verifies:", verify_s3(dn) == [], component_membership(dn))

# %%
# Random points of one chart all land on the main component.
rng = random.Random(0)
pts = [u_beta_chart(QQ, *(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3))) for _ in range(50)]
print("chart points on main component:", all(component_membership(p)["main"] for p in pts))

# %%
# Triple covers go in and come back out; discriminants differ by a factor of 4.
t = TripleCoverData.make(QQ, 1, 2, 0, 1)
s = from_triple_cover(t)
print("round trip:", quotient_by_sigma(s) == t)
print("triple discriminant / discriminant =", triple_discriminant(t) / discriminant(s))

# %%
# Surface invariants of a cover from intersection numbers downstairs.
out = surface_invariants(SurfaceNumbers(KY2=1, chiOY=1, c2=2, D2=3))
print(out.to_json())
