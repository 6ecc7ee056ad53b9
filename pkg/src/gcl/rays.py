"""Rays of the dual monoid of K_+: validation, predicates, enumeration, h and e.

A ray is stored by its values on every canonical pair (including pairs with
m + n = 0) together with the unique rational values E_m on the basis e_m of
Z^M/<e_0> ⊗ Q. Only the pairs with m + n != 0 are required on input; the
remaining ones are determined by them.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .abelian_group import Element, FiniteAbelianGroup
from .errors import (
    GroupMismatch,
    Incomplete,
    InternalInconsistency,
    InvalidInput,
    NotAFunctional,
    NotInDualMonoid,
    TooLarge,
)
from .intlinalg import inverse_rational, primitive, rank, solve_rational
from .lattice import is_saturated, k_generators

DEFAULT_MAX_ORDER = 9


def default_max_order() -> int:
    env = os.environ.get("GCL_MAX_ORDER")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class Ray:
    group: FiniteAbelianGroup
    values: tuple[int, ...]
    e_values: tuple[Fraction, ...]

    def value_at(self, i: int, j: int) -> int:
        """E(v_{m,n}) for element indices; zero when either index is 0."""
        if i == 0 or j == 0:
            return 0
        return self.values[k_generators(self.group).position(i, j)]

    def value(self, m: Element, n: Element) -> int:
        if m.group != self.group or n.group != self.group:
            raise GroupMismatch("pair outside the ray's group")
        return self.value_at(m.index, n.index)

    def e_value(self, m: Element) -> Fraction:
        return self.e_values[m.index]

    def pair_values(self) -> dict[tuple[Element, Element], int]:
        kg = k_generators(self.group)
        return dict(zip(kg.element_pairs(), self.values))

    def reduced_values(self) -> dict[tuple[Element, Element], int]:
        kg = k_generators(self.group)
        pairs = kg.element_pairs()
        return {pairs[k]: self.values[k] for k in kg.reduced}

    def is_zero(self) -> bool:
        return not any(self.values)

    def __add__(self, other: "Ray") -> "Ray":
        if other.group != self.group:
            raise GroupMismatch("rays over different groups")
        return Ray(
            self.group,
            tuple(a + b for a, b in zip(self.values, other.values)),
            tuple(a + b for a, b in zip(self.e_values, other.e_values)),
        )

    def scaled(self, k: int) -> "Ray":
        return Ray(self.group, tuple(k * a for a in self.values), tuple(k * a for a in self.e_values))

    def __repr__(self) -> str:
        return f"Ray({self.group.serialize()}: {list(self.values)})"


def zero_ray(group: FiniteAbelianGroup) -> Ray:
    kg = k_generators(group)
    return Ray(group, (0,) * len(kg.pairs), (Fraction(0),) * group.order)


def _normalize_key(group: FiniteAbelianGroup, key) -> tuple[int, int]:
    if isinstance(key, str):
        parts = key.split(",")
        if len(parts) != 2:
            raise InvalidInput(f"bad pair key {key!r}")
        key = (group.parse_element(parts[0]), group.parse_element(parts[1]))
    if len(key) != 2:
        raise InvalidInput(f"bad pair key {key!r}")
    out = []
    for x in key:
        if isinstance(x, Element):
            if x.group != group:
                raise GroupMismatch("pair element outside the group")
            out.append(x.index)
        elif isinstance(x, int):
            out.append(group.index(group.elements[x].residues))
        else:
            out.append(group.index(tuple(x)))
    return out[0], out[1]


def ray_from_pair_values(group: FiniteAbelianGroup, values: Mapping) -> Ray:
    """Validate pair values and solve for the rational e-values.

    Keys may be pairs of Elements, of element indices, of residue tuples, or
    ``"m,n"`` strings. Every pair with m, n, m+n != 0 must be present; pairs
    with m + n = 0 are optional and checked for consistency when given.
    """
    kg = k_generators(group)
    given: dict[int, int] = {}
    for key, val in values.items():
        i, j = _normalize_key(group, key)
        v = int(val)
        if v != val:
            raise NotAFunctional(f"non-integer value {val!r}")
        if i == 0 or j == 0:
            if v != 0:
                raise NotAFunctional("v_{m,0} = 0 forces a zero value")
            continue
        k = kg.position(i, j)
        if k in given and given[k] != v:
            raise NotAFunctional("conflicting values for the same pair")
        given[k] = v
    missing = [kg.pairs[k] for k in kg.reduced if k not in given]
    if missing:
        els = group.elements
        i, j = missing[0]
        raise Incomplete(f"missing value for pair ({els[i]!r},{els[j]!r})")
    for k, v in given.items():
        if v < 0:
            raise NotInDualMonoid(f"negative value {v} on pair {kg.pairs[k]}")
    if group.order == 1:
        return zero_ray(group)
    keys = sorted(given)
    sol = solve_rational([kg.vectors[k] for k in keys], [given[k] for k in keys])
    if sol is None:
        raise NotAFunctional("values are not additive on K")
    return _ray_from_solution(group, sol)


def _ray_from_solution(group: FiniteAbelianGroup, sol: Sequence[Fraction]) -> Ray:
    kg = k_generators(group)
    vals = []
    for vec in kg.vectors:
        s = sum(c * x for c, x in zip(vec, sol) if c)
        if s.denominator != 1:
            raise NotAFunctional("functional takes non-integer values on K")
        if s < 0:
            raise NotInDualMonoid("functional is negative on a generator")
        vals.append(int(s))
    return Ray(group, tuple(vals), (Fraction(0),) + tuple(Fraction(x) for x in sol))


def ray_from_e_values(group: FiniteAbelianGroup, e_values: Mapping | Sequence) -> Ray:
    """Build a ray from E_m, given per element (index 0 must be 0)."""
    if isinstance(e_values, Mapping):
        seq = [Fraction(0)] * group.order
        for key, val in e_values.items():
            idx = key.index if isinstance(key, Element) else int(key)
            seq[idx] = Fraction(val)
    else:
        seq = [Fraction(x) for x in e_values]
    if len(seq) != group.order or seq[0] != 0:
        raise InvalidInput("need one e-value per element with E_0 = 0")
    return _ray_from_solution(group, seq[1:])


def ray_from_sequence(group: FiniteAbelianGroup, seq: Sequence[int]) -> Ray:
    """Values listed over all canonical pairs, or over the reduced pairs only."""
    kg = k_generators(group)
    if len(seq) == len(kg.pairs):
        return ray_from_pair_values(group, {kg.pairs[k]: v for k, v in enumerate(seq)})
    if len(seq) == len(kg.reduced):
        return ray_from_pair_values(group, {kg.pairs[k]: v for k, v in zip(kg.reduced, seq)})
    raise Incomplete(f"expected {len(kg.pairs)} or {len(kg.reduced)} values, got {len(seq)}")


def support(ray: Ray) -> frozenset[tuple[Element, Element]]:
    pairs = k_generators(ray.group).element_pairs()
    return frozenset(p for p, v in zip(pairs, ray.values) if v > 0)


def _gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def is_normalized(ray: Ray) -> bool:
    return _gcd_all(ray.values) == 1


def _kernel_rank(ray: Ray) -> int:
    kg = k_generators(ray.group)
    return rank([v for v, e in zip(kg.vectors, ray.values) if e == 0])


def is_extremal(ray: Ray) -> bool:
    if ray.is_zero() or not is_normalized(ray):
        return False
    return _kernel_rank(ray) == ray.group.order - 2


def _joint_kernel_saturated(group: FiniteAbelianGroup, rays: Sequence[Ray], expected_rank: int) -> bool:
    """Whether span{v : E(v) = 0 for all rays} is ∩ ker E (rank and saturation in K)."""
    kg = k_generators(group)
    coords = kg.generator_k_coords
    rows = [coords[k] for k in range(len(kg.pairs)) if all(r.values[k] == 0 for r in rays)]
    if rank(rows) != expected_rank:
        return False
    return is_saturated(rows)


def is_smooth_extremal(ray: Ray) -> bool:
    if not is_extremal(ray):
        return False
    if 1 not in ray.values:
        return False
    return _joint_kernel_saturated(ray.group, [ray], ray.group.order - 2)


def is_smooth_sequence(rays: Sequence[Ray]) -> bool:
    if not rays:
        return True
    group = rays[0].group
    if any(r.group != group for r in rays):
        raise GroupMismatch("rays over different groups")
    npairs = len(k_generators(group).pairs)
    for i, ray in enumerate(rays):
        found = any(
            ray.values[k] == 1 and all(rays[j].values[k] == 0 for j in range(len(rays)) if j != i)
            for k in range(npairs)
        )
        if not found:
            return False
    return _joint_kernel_saturated(group, rays, group.order - 1 - len(rays))


def _double_description(constraints: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {x : a.x >= 0 for every row a}.

    Incremental double description; constraints are inserted in the given
    order, and two rays are combined when they are adjacent, tested
    combinatorially: no third ray vanishes on every constraint where both do.
    """
    basis_rows: list[int] = []
    for k, a in enumerate(constraints):
        if rank([constraints[i] for i in basis_rows] + [a]) > len(basis_rows):
            basis_rows.append(k)
        if len(basis_rows) == dim:
            break
    if len(basis_rows) < dim:
        raise InternalInconsistency("constraint system is not full rank")
    inv = inverse_rational([constraints[k] for k in basis_rows])
    rays: list[tuple[int, ...]] = []
    zmask: list[int] = []
    full = 0
    for k in basis_rows:
        full |= 1 << k
    for j in range(dim):
        col = [inv[i][j] for i in range(dim)]
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        rays.append(primitive([int(x * den) for x in col]))
        zmask.append(full & ~(1 << basis_rows[j]))
    in_basis = set(basis_rows)
    need = dim - 2
    for k, a in enumerate(constraints):
        if k in in_basis:
            continue
        vals = [sum(x * y for x, y in zip(a, r) if x) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        bit = 1 << k
        if not neg:
            zmask = [z | bit if v == 0 else z for z, v in zip(zmask, vals)]
            continue
        new_rays: list[tuple[int, ...]] = []
        new_masks: list[int] = []
        for p in pos:
            zp = zmask[p]
            vp = vals[p]
            for q in neg:
                z = zp & zmask[q]
                if z.bit_count() < need:
                    continue
                adjacent = True
                for o, zo in enumerate(zmask):
                    if o != p and o != q and zo & z == z:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vq = vals[q]
                r = primitive([vp * y - vq * x for x, y in zip(rays[p], rays[q])])
                new_rays.append(r)
                new_masks.append(z | bit)
        keep = [i for i, v in enumerate(vals) if v >= 0]
        rays = [rays[i] for i in keep] + new_rays
        zmask = [zmask[i] | (bit if vals[i] == 0 else 0) for i in keep] + new_masks
    return rays


def enumerate_extremal_rays(group: FiniteAbelianGroup, max_order: int | None = None) -> list[Ray]:
    """All normalized extremal rays, sorted by their pair values."""
    bound = default_max_order() if max_order is None else max_order
    if group.order > bound:
        raise TooLarge(f"|M| = {group.order} exceeds the bound {bound}")
    if group.order <= 1:
        return []
    return list(_enumerate_cached(group))


_ENUM_CACHE: dict[FiniteAbelianGroup, tuple[Ray, ...]] = {}


def _enumerate_cached(group: FiniteAbelianGroup) -> tuple[Ray, ...]:
    if group in _ENUM_CACHE:
        return _ENUM_CACHE[group]
    kg = k_generators(group)
    found: dict[tuple[int, ...], Ray] = {}
    for x in _double_description(kg.vectors, kg.dim):
        vals = [sum(c * y for c, y in zip(vec, x) if c) for vec in kg.vectors]
        g = _gcd_all(vals)
        if g == 0:
            raise InternalInconsistency("zero ray produced by the enumeration")
        key = tuple(v // g for v in vals)
        if key not in found:
            found[key] = Ray(group, key, (Fraction(0),) + tuple(Fraction(c, g) for c in x))
    out = tuple(found[k] for k in sorted(found))
    _ENUM_CACHE[group] = out
    return out


@dataclass(frozen=True)
class HData:
    H: frozenset[Element]
    h_m: dict[Element, int]
    h: int


def h_of_ray(ray: Ray) -> HData:
    g = ray.group
    n = g.order
    add_t, neg_t = g.add_table, g.neg_table
    ev = ray.e_values
    H = {i for i in range(n) if ev[i] + ev[neg_t[i]] == 0}
    for i in H:
        for j in H:
            if add_t[i][j] not in H:
                raise InternalInconsistency("H_E is not a subgroup")
    coset = {}
    for i in range(n):
        coset[i] = frozenset(add_t[i][h] for h in H)
    hm = {}
    outside = [i for i in range(n) if i not in H]
    for m in range(n):
        if m in H:
            hm[m] = 0
            continue
        target = coset[m]
        ok = all(
            ray.value_at(u, v) > 0 for u in outside for v in outside if add_t[u][v] in target
        )
        hm[m] = int(ok)
    total = sum(hm.values())
    if total % len(H):
        raise InternalInconsistency("sum of h_m is not divisible by |H|")
    els = g.elements
    return HData(frozenset(els[i] for i in H), {els[i]: hm[i] for i in range(n)}, total // len(H))


def e_invariant(ray: Ray) -> int:
    """Sum over m != 0 of E(v_{m,-m}), evaluated through the e-values."""
    g = ray.group
    ev = ray.e_values
    neg_t = g.neg_table
    total = sum(ev[i] + ev[neg_t[i]] for i in range(1, g.order))
    if total.denominator != 1:
        raise InternalInconsistency("e-invariant is not an integer")
    return int(total)


def is_codim1_regular(ray: Ray) -> bool:
    from .catalog import pardini_rays

    return ray in set(pardini_rays(ray.group))
