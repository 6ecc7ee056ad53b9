"""
Extremal rays and the h-invariant
=================================

Walk through the cone of degeneration patterns for a small cyclic group,
sort its extremal rays by h, and match the h = 2 rays with the catalog.
"""

from collections import Counter

from gcl.abelian_group import cyclic_quotients, make_group
from gcl.catalog import delta_ray, pardini_ray, sigma_modulo_duality
from gcl.rays import enumerate_extremal_rays, h_of_ray, is_smooth_extremal

# The grading group: integers mod 6.
group = make_group([6])
rays = enumerate_extremal_rays(group)
print(f"{len(rays)} extremal rays for Z/6")

# Each ray lists, per pair {m, n}, how many times the product v_m v_n degenerates.
first = rays[0]
for (m, n), value in list(first.reduced_values().items())[:5]:
    print(f"  pair ({m.serialize()},{n.serialize()}) -> {value}")

# %%
# Count rays by h.
hist = Counter(h_of_ray(r).h for r in rays)
print("rays by h:", dict(sorted(hist.items())))

# %%
# The h = 1 rays are exactly the carry rays of surjections onto cyclic groups.
carries = {pardini_ray(phi).values for phi in cyclic_quotients(group)}
h1 = {r.values for r in rays if h_of_ray(r).h == 1}
print("h = 1 rays are carry rays:", h1 == carries)

# %%
# The smooth h = 2 rays come from the parameter tuples (r, alpha, N, qbar, phi),
# one ray per duality orbit.
h2 = {r.values for r in rays if is_smooth_extremal(r) and h_of_ray(r).h == 2}
reps = sigma_modulo_duality(group)
print(f"{len(h2)} smooth h = 2 rays, {len(reps)} tuples up to duality")
print("catalog covers them:", h2 == {delta_ray(c).values for c in reps})
