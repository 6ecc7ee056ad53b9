"""M-graded algebras of rank |M| given by their structure constants.

With basis v_m (v_0 = 1) the multiplication is v_m v_n = psi_{m,n} v_{m+n};
psi is symmetric and psi_{m,0} = 1, so it is stored once per canonical pair.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .abelian_group import Element, FiniteAbelianGroup, generated_subgroup, two_gen_type
from .catalog import qbar_invariants
from .errors import (
    GroupMismatch,
    Incomplete,
    InternalInconsistency,
    InvalidInput,
    NonTerminating,
)
from .lattice import k_generators
from .rays import Ray
from .rings import CoefficientRing


@dataclass(frozen=True)
class MGradedAlgebra:
    group: FiniteAbelianGroup
    ring: CoefficientRing
    psi: tuple

    def mult(self, i: int, j: int):
        """psi for element indices; 1 when either index is 0."""
        if i == 0 or j == 0:
            return self.ring.one
        return self.psi[k_generators(self.group).position(i, j)]

    def psi_of(self, m: Element, n: Element):
        if m.group != self.group or n.group != self.group:
            raise GroupMismatch("pair outside the algebra's grading group")
        return self.mult(m.index, n.index)

    def table(self) -> dict[tuple[Element, Element], object]:
        return dict(zip(k_generators(self.group).element_pairs(), self.psi))


@dataclass(frozen=True)
class TorsorTwist:
    group: FiniteAbelianGroup
    ring: CoefficientRing
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.group.order:
            raise InvalidInput("one twist value per element is required")
        if self.values and self.values[0] != self.ring.one:
            raise InvalidInput("the twist must be 1 in degree 0")
        if not all(self.ring.is_unit(v) for v in self.values):
            raise InvalidInput("twist values must be units")


def trivial_twist(group: FiniteAbelianGroup, ring: CoefficientRing) -> TorsorTwist:
    return TorsorTwist(group, ring, tuple(ring.one for _ in range(group.order)))


def random_twist(group: FiniteAbelianGroup, ring: CoefficientRing, rng: random.Random) -> TorsorTwist:
    vals = [ring.one] + [ring.random_unit(rng) for _ in range(group.order - 1)]
    return TorsorTwist(group, ring, tuple(vals))


def algebra_from_table(group: FiniteAbelianGroup, ring: CoefficientRing, table: Mapping) -> MGradedAlgebra:
    """Keys as in ``rays.ray_from_pair_values``; every canonical pair is required."""
    from .rays import _normalize_key

    kg = k_generators(group)
    vals: dict[int, object] = {}
    for key, val in table.items():
        i, j = _normalize_key(group, key)
        x = ring(val)
        if i == 0 or j == 0:
            if x != ring.one:
                raise InvalidInput("psi_{m,0} must be 1")
            continue
        vals[kg.position(i, j)] = x
    missing = [kg.pairs[k] for k in range(len(kg.pairs)) if k not in vals]
    if missing:
        els = group.elements
        i, j = missing[0]
        raise Incomplete(f"missing psi for pair ({els[i]!r},{els[j]!r})")
    return MGradedAlgebra(group, ring, tuple(vals[k] for k in range(len(kg.pairs))))


@dataclass(frozen=True)
class Violation:
    m: Element
    n: Element
    t: Element

    def __str__(self) -> str:
        return f"associativity fails at ({self.m!r},{self.n!r},{self.t!r})"


def verify(alg: MGradedAlgebra) -> list[Violation]:
    g = alg.group
    n = g.order
    add_t = g.add_table
    mult = alg.mult
    els = g.elements
    out = []
    for m in range(1, n):
        for k in range(1, n):
            mk = add_t[m][k]
            p = mult(m, k)
            for t in range(1, n):
                kt = add_t[k][t]
                if p * mult(mk, t) != mult(k, t) * mult(kt, m):
                    out.append(Violation(els[m], els[k], els[t]))
    return out


def from_ray(
    group: FiniteAbelianGroup, ring: CoefficientRing, ray: Ray, twist: TorsorTwist | None = None
) -> MGradedAlgebra:
    """psi_{m,n} = lambda_m lambda_n / lambda_{m+n} * 0^{E(v_{m,n})}."""
    if ray.group != group:
        raise GroupMismatch("ray over another group")
    lam = (twist or trivial_twist(group, ring)).values
    add_t = group.add_table
    kg = k_generators(group)
    psi = []
    for (i, j), e in zip(kg.pairs, ray.values):
        if e:
            psi.append(ring.zero)
        else:
            psi.append(lam[i] * lam[j] * ring.inv(lam[add_t[i][j]]))
    return MGradedAlgebra(group, ring, tuple(psi))


@dataclass(frozen=True)
class AlgebraHData:
    H: frozenset[Element]
    h_m: dict[Element, int]
    h: int


def h_data(alg: MGradedAlgebra) -> AlgebraHData:
    g = alg.group
    n = g.order
    ring = alg.ring
    add_t, neg_t = g.add_table, g.neg_table
    unit = [[ring.is_unit(alg.mult(i, j)) for j in range(n)] for i in range(n)]
    H = frozenset(i for i in range(n) if unit[i][neg_t[i]])
    if any(add_t[a][b] not in H for a in H for b in H):
        raise InternalInconsistency("H_psi is not a subgroup")
    hm = [0] * n
    for m in range(n):
        if m in H:
            continue
        coset = {add_t[m][h] for h in H}
        hm[m] = int(
            all(
                not unit[u][v]
                for u in range(n)
                if u not in H
                for v in range(n)
                if v not in H and add_t[u][v] in coset
            )
        )
    total = sum(hm)
    if total % len(H):
        raise InternalInconsistency("h is not an integer")
    els = g.elements
    return AlgebraHData(frozenset(els[i] for i in H), {els[i]: hm[i] for i in range(n)}, total // len(H))


def is_torsor(alg: MGradedAlgebra) -> bool:
    return all(alg.ring.is_unit(x) for x in alg.psi)


def reachable_degrees(alg: MGradedAlgebra, degrees: Iterable[Element]) -> frozenset[int]:
    g = alg.group
    add_t = g.add_table
    reach = {0} | {g.index(d) for d in degrees}
    changed = True
    while changed:
        changed = False
        for a in list(reach):
            for b in list(reach):
                c = add_t[a][b]
                if c not in reach and alg.mult(a, b) != 0:
                    reach.add(c)
                    changed = True
    return frozenset(reach)


def is_generated_in(alg: MGradedAlgebra, degrees: Iterable[Element]) -> bool:
    if not alg.ring.is_field:
        raise InvalidInput("generation test needs a field")
    return len(reachable_degrees(alg, degrees)) == alg.group.order


@dataclass(frozen=True)
class UniversalTable:
    """Exponents (i, j) with v_l v_l' = a^i b^j v_{l+l'} in the universal algebra."""

    r: int
    alpha: int
    N: int
    qbar: int
    group: FiniteAbelianGroup
    exponents: tuple[tuple[int, int], ...]
    basis: dict

    def exponent(self, i: int, j: int) -> tuple[int, int]:
        if i == 0 or j == 0:
            return (0, 0)
        return self.exponents[k_generators(self.group).position(i, j)]


def _rewrite(A: int, B: int, inv, fuel: int) -> tuple[int, int, int, int]:
    """Reduce s^A t^B to a^i b^j s^A' t^B' inside the staircase."""
    z, x, y, w = inv.z, inv.x, inv.y, inv.w
    qr, dh = inv.qhat * inv.r, inv.d_qhat
    gamma = 0 if inv.qbar == 1 else 1
    ea = eb = 0
    steps = 0
    while True:
        if A >= z:
            A, B, ea = A - z, B + y, ea + 1
        elif A >= qr and B >= dh:
            A, B, ea, eb = A - qr, B - dh, ea + gamma, eb + 1
        elif B >= x:
            A, B, eb = A + w, B - x, eb + 1
        else:
            return ea, eb, A, B
        steps += 1
        if steps > fuel:
            raise NonTerminating("monomial rewriting exceeded its fuel")


def universal_table(r: int, alpha: int, N: int, qbar: int, fuel: int | None = None) -> UniversalTable:
    from .catalog import good_pairs

    inv = qbar_invariants(r, alpha, N, qbar)
    gp = good_pairs(r, alpha, N, qbar)
    M = gp.group
    kg = k_generators(M)
    basis = {M.index(l): ab for l, ab in gp.table.items()}
    if len(set(basis.values())) != M.order:
        raise InternalInconsistency("basis monomials are not distinct")
    add_t = M.add_table
    scale = 4 * (inv.z + inv.x + inv.qhat * r + inv.d_qhat)
    exps = []
    for i, j in kg.pairs:
        A = basis[i][0] + basis[j][0]
        B = basis[i][1] + basis[j][1]
        budget = fuel if fuel is not None else scale * (A + B + 1)
        ea, eb, A2, B2 = _rewrite(A, B, inv, budget)
        if (A2, B2) != basis[add_t[i][j]]:
            raise InternalInconsistency("rewriting did not land on the basis monomial")
        exps.append((ea, eb))
    return UniversalTable(r, alpha, N, qbar, M, tuple(exps), basis)


def universal_two_gen_algebra(
    r: int, alpha: int, N: int, qbar: int, a, b, ring: CoefficientRing, fuel: int | None = None
) -> MGradedAlgebra:
    tab = universal_table(r, alpha, N, qbar, fuel)
    a, b = ring(a), ring(b)
    psi = tuple((a ** i) * (b ** j) for i, j in tab.exponents)
    return MGradedAlgebra(tab.group, ring, psi)


@dataclass(frozen=True)
class QbarResult:
    z: int
    qbar: int
    lam: object


def _powers(alg: MGradedAlgebra, i: int, count: int) -> list:
    """c_h with v_m^h = c_h v_{hm}, for h = 0..count."""
    add_t = alg.group.add_table
    out = [alg.ring.one]
    pos = 0
    for _ in range(count):
        out.append(out[-1] * alg.mult(pos, i))
        pos = add_t[pos][i]
    return out


def qbar_of(alg: MGradedAlgebra, m: Element, n: Element) -> QbarResult:
    g = alg.group
    ring = alg.ring
    if not ring.is_field:
        raise InvalidInput("qbar_of needs a field")
    if m.group != g or n.group != g:
        raise GroupMismatch("degrees outside the grading group")
    mi, ni = m.index, n.index
    if mi == 0 or ni == 0 or mi == ni:
        raise InvalidInput("m and n must be distinct and nonzero")
    if len(generated_subgroup(g, [mi, ni])) != g.order:
        raise InvalidInput("m and n must generate the group")
    if verify(alg):
        raise InvalidInput("the table is not associative")
    if h_data(alg).H != frozenset([g.zero]):
        raise InvalidInput("H of the algebra must be trivial")
    if not is_generated_in(alg, [m, n]):
        raise InvalidInput("the algebra is not generated in degrees m, n")
    pres = two_gen_type(g, m, n)
    add_t = g.add_table
    om, on = g.order_table[mi], g.order_table[ni]
    cm, cn = _powers(alg, mi, om), _powers(alg, ni, on)
    n_multiples = {}
    pos = 0
    for i in range(on):
        n_multiples.setdefault(pos, i)
        pos = add_t[pos][ni]
    pos = 0
    for h in range(1, om + 1):
        pos = add_t[pos][mi]
        if pos not in n_multiples:
            continue
        i = n_multiples[pos]
        if cn[i] != 0:
            lam = cm[h] * ring.inv(cn[i])
        elif cm[h] == 0:
            lam = ring.zero
        else:
            continue
        if h % pres.r:
            raise InternalInconsistency("z is not a multiple of r")
        return QbarResult(h, h // pres.r, lam)
    raise InternalInconsistency("no z found up to the order of m")


def degree_generators(alg: MGradedAlgebra) -> frozenset[Element]:
    """Degrees m with h_m = 1."""
    hd = h_data(alg)
    return frozenset(m for m, v in hd.h_m.items() if v)


def random_verified_table(
    group: FiniteAbelianGroup, ring: CoefficientRing, rng: random.Random, rays: Sequence[Ray] | None = None
) -> MGradedAlgebra:
    """A random verified algebra: a twisted monomial algebra of a random ray sum or a torsor."""
    from .rays import enumerate_extremal_rays, zero_ray

    pool = list(rays) if rays is not None else enumerate_extremal_rays(group)
    ray = zero_ray(group)
    for r in pool:
        if rng.random() < 0.3:
            ray = ray + r
    return from_ray(group, ring, ray, random_twist(group, ring, rng))
