"""Named ray families and the combinatorics of two-generator algebras.

Covers the carry rays attached to cyclic quotients, the record sequence
Omega_{beta,N} with its derived invariants, the staircase of good pairs, the
Lambda/Delta rays, the parameter set Sigma_M with its duality, and the
family Theta^2_M.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import NamedTuple

from .abelian_group import (
    Element,
    FiniteAbelianGroup,
    GroupHom,
    cyclic_quotients,
    make_group,
    surjections,
    two_gen_group,
)
from .errors import (
    DegenerateCase,
    GroupMismatch,
    InternalInconsistency,
    InvalidPresentation,
    InvalidTarget,
    NotInOmega,
    NotSurjective,
    TooLarge,
)
from .rays import Ray, default_max_order, ray_from_e_values


def pardini_ray(phi: GroupHom) -> Ray:
    """E(v_{m,n}) = 1 exactly when the lifted residues of phi(m), phi(n) overflow l."""
    tgt = phi.target
    if len(tgt.cyclic_orders) != 1:
        raise InvalidTarget("the target must be a nontrivial cyclic group")
    if not phi.is_surjective():
        raise NotSurjective(f"{phi!r} is not surjective")
    l = tgt.order
    return ray_from_e_values(phi.source, [Fraction(tgt.residues[j][0], l) for j in phi.table])


def pardini_rays(group: FiniteAbelianGroup) -> list[Ray]:
    return [pardini_ray(phi) for phi in cyclic_quotients(group)]


def d_q(beta: int, N: int, q: int) -> int:
    """The representative of q*beta mod N in (0, N]."""
    return (q * beta - 1) % N + 1


def _check_beta(beta: int, N: int) -> None:
    if N <= 1 or not 0 <= beta < N:
        raise InvalidPresentation(f"need N > 1 and 0 <= beta < N, got beta={beta}, N={N}")


def omega_set(beta: int, N: int) -> list[int]:
    """Indices 0 < q <= o(beta) at which d_q beats every earlier d_q'."""
    _check_beta(beta, N)
    top = N // gcd(N, beta)
    out, best = [], 0
    for q in range(1, top + 1):
        d = d_q(beta, N, q)
        if d > best:
            out.append(q)
            best = d
    return out


def q_hat(beta: int, N: int, qbar: int) -> int:
    if qbar not in omega_set(beta, N):
        raise NotInOmega(f"{qbar} is not in Omega_{{{beta},{N}}}")
    return min(range(qbar), key=lambda q: d_q(beta, N, q))


@dataclass(frozen=True)
class QbarInvariants:
    r: int
    alpha: int
    N: int
    qbar: int
    qhat: int
    qprime: int
    z: int
    y: int
    x: int
    w: int
    f: tuple[int, ...]

    @property
    def beta(self) -> int:
        return (-self.alpha) % self.N

    @property
    def d_qhat(self) -> int:
        return d_q(self.beta, self.N, self.qhat)

    @property
    def order(self) -> int:
        return self.r * self.N


def _check_tuple(r: int, alpha: int, N: int) -> None:
    if not (r > 0 and N > 1 and 0 <= alpha < N):
        raise InvalidPresentation(f"invalid (r, alpha, N) = ({r}, {alpha}, {N})")


@lru_cache(maxsize=None)
def qbar_invariants(r: int, alpha: int, N: int, qbar: int) -> QbarInvariants:
    _check_tuple(r, alpha, N)
    beta = (-alpha) % N
    if qbar not in omega_set(beta, N):
        raise NotInOmega(f"{qbar} is not in Omega_{{{beta},{N}}}")
    qh = min(range(qbar), key=lambda q: d_q(beta, N, q))
    qp = qbar - qh
    z = qbar * r
    y = N - d_q(beta, N, qbar)
    x = N - d_q(beta, N, qp) if qbar > 1 else N
    w = qp * r if qbar > 1 else 0
    dh = d_q(beta, N, qh)
    f = tuple(x if c < qh * r else dh for c in range(z))
    inv = QbarInvariants(r, alpha, N, qbar, qh, qp, z, y, x, w, f)
    problems = []
    if qh * N + qbar * dh - qh * d_q(beta, N, qbar) != N:
        problems.append("q-hat identity")
    if z * x - y * w != r * N:
        problems.append("zx - yw = rN")
    if sum(f) != r * N:
        problems.append("sum f = rN")
    if any(a < b for a, b in zip(f, f[1:])):
        problems.append("f nonincreasing")
    if not (y < x and w < z):
        problems.append("y < x and w < z")
    if problems:
        raise InternalInconsistency(f"invariants of {(r, alpha, N, qbar)} fail: {problems}")
    return inv


@dataclass(frozen=True)
class GoodPairTable:
    invariants: QbarInvariants
    group: FiniteAbelianGroup
    table: dict

    def __getitem__(self, l: Element) -> tuple[int, int]:
        return self.table[l]


@lru_cache(maxsize=None)
def good_pairs(r: int, alpha: int, N: int, qbar: int) -> GoodPairTable:
    inv = qbar_invariants(r, alpha, N, qbar)
    tg = two_gen_group(r, alpha, N)
    table: dict[Element, tuple[int, int]] = {}
    for A in range(inv.z):
        for B in range(inv.f[A]):
            l = tg.image(A, B)
            if l in table:
                raise InternalInconsistency(f"good pairs collide at {l!r}")
            table[l] = (A, B)
    if len(table) != r * N:
        raise InternalInconsistency("the staircase does not cover the group")
    return GoodPairTable(inv, tg.group, table)


def _check_phi(phi: GroupHom, r: int, alpha: int, N: int) -> None:
    tg = two_gen_group(r, alpha, N)
    if phi.target != tg.group:
        raise GroupMismatch("phi must map onto the two-generator group")
    if not phi.is_surjective():
        raise NotSurjective(f"{phi!r} is not surjective")


def lambda_delta(r: int, alpha: int, N: int, qbar: int, phi: GroupHom) -> tuple[Ray, Ray]:
    """The two dual-basis rays, pulled back to the source of phi."""
    inv = qbar_invariants(r, alpha, N, qbar)
    if inv.z == 1 or inv.x == 1:
        raise DegenerateCase(f"z = {inv.z}, x = {inv.x}: the rays degenerate to carry rays")
    _check_phi(phi, r, alpha, N)
    gp = good_pairs(r, alpha, N, qbar)
    M = gp.group
    rn = r * N
    lam, dlt = [], []
    for j in phi.table:
        eps, dl = gp.table[M.elements[j]]
        lam.append(Fraction(inv.x * eps + inv.w * dl, rn))
        dlt.append(Fraction(inv.y * eps + inv.z * dl, rn))
    try:
        return ray_from_e_values(phi.source, lam), ray_from_e_values(phi.source, dlt)
    except Exception as exc:  # integrality is a theorem; failure is a bug
        raise InternalInconsistency(f"Lambda/Delta not in the dual monoid: {exc}") from exc


@dataclass(frozen=True)
class SigmaTuple:
    r: int
    alpha: int
    N: int
    qbar: int
    phi: GroupHom

    def key(self) -> tuple:
        return (self.r, self.alpha, self.N, self.qbar, tuple(self.phi.serialize()))

    def numeric(self) -> tuple[int, int, int, int]:
        return (self.r, self.alpha, self.N, self.qbar)


def sigma_violations(r: int, alpha: int, N: int, qbar: int, bar: bool = False) -> list[str]:
    """Which defining constraints of Sigma (or Sigma-bar) fail."""
    out = []
    if not (r > 0 and N > 1 and 0 <= alpha < N):
        return ["0 <= alpha < N, r > 0, N > 1"]
    if not (r > 1 or alpha > 1):
        out.append("r > 1 or alpha > 1")
    if qbar not in omega_set((-alpha) % N, N):
        out.append("qbar in Omega")
    if qbar * r == 1:
        out.append("qbar r != 1")
    if bar:
        if qbar == N:
            out.append("qbar != N")
    else:
        if (qbar * alpha) % N == 1 % N:
            out.append("qbar alpha != 1 mod N")
        if qbar == N // gcd(alpha, N):
            out.append("qbar != N/(alpha,N)")
    return out


def is_sigma_tuple(chi: SigmaTuple, bar: bool = False) -> bool:
    if sigma_violations(*chi.numeric(), bar=bar):
        return False
    tg = two_gen_group(chi.r, chi.alpha, chi.N)
    return chi.phi.target == tg.group and chi.phi.is_surjective()


def sigma_enumerate(
    group: FiniteAbelianGroup, bar: bool = False, max_order: int | None = None
) -> list[SigmaTuple]:
    bound = default_max_order() if max_order is None else max_order
    if group.order > bound:
        raise TooLarge(f"|M| = {group.order} exceeds the bound {bound}")
    out = []
    n = group.order
    for N in range(2, n + 1):
        for alpha in range(N):
            for r in range(1, n // N + 1):
                if n % (r * N):
                    continue
                qbars = [q for q in omega_set((-alpha) % N, N) if not sigma_violations(r, alpha, N, q, bar)]
                if not qbars:
                    continue
                phis = surjections(group, two_gen_group(r, alpha, N).group)
                for q in qbars:
                    out.extend(SigmaTuple(r, alpha, N, q, phi) for phi in phis)
    out.sort(key=SigmaTuple.key)
    return out


def _swap_hom(r: int, alpha: int, N: int, dual: tuple[int, int, int]) -> GroupHom:
    """The isomorphism M_{r,alpha,N} -> M_dual sending e1 to e2' and e2 to e1'."""
    src = two_gen_group(r, alpha, N)
    dst = two_gen_group(*dual)
    imgs = []
    for g in src.group.basis():
        a, b = src.lift(g)
        imgs.append(dst.image(b, a))
    hom = GroupHom(src.group, dst.group, tuple(imgs))
    if hom(src.e1) != dst.e2 or hom(src.e2) != dst.e1 or not hom.is_surjective():
        raise InternalInconsistency("swap is not an isomorphism")
    return hom


def sigma_dual(chi: SigmaTuple) -> SigmaTuple:
    r, alpha, N, qbar = chi.numeric()
    g = gcd(alpha, N)
    o = N // g
    qt = next(q for q in range(o) if (q * alpha - g) % N == 0)
    inv = qbar_invariants(r, alpha, N, qbar)
    if inv.y % g:
        raise InternalInconsistency("y is not divisible by (alpha, N)")
    dual = (g, qt * r, r * N // g)
    swap = _swap_hom(r, alpha, N, dual)
    return SigmaTuple(dual[0], dual[1], dual[2], inv.y // g, swap.compose_after(chi.phi))


def sigma_modulo_duality(group: FiniteAbelianGroup, max_order: int | None = None) -> list[SigmaTuple]:
    """Lexicographically minimal representative of each duality orbit."""
    out = []
    for chi in sigma_enumerate(group, max_order=max_order):
        if chi.key() <= sigma_dual(chi).key():
            out.append(chi)
    return out


def delta_ray(chi: SigmaTuple) -> Ray:
    return lambda_delta(chi.r, chi.alpha, chi.N, chi.qbar, chi.phi)[1]


class Theta2Entry(NamedTuple):
    label: str
    rays: tuple[Ray, ...]


def theta2(group: FiniteAbelianGroup, max_order: int | None = None) -> list[Theta2Entry]:
    bound = default_max_order() if max_order is None else max_order
    if group.order > bound:
        raise TooLarge(f"|M| = {group.order} exceeds the bound {bound}")
    out = []
    for phi in cyclic_quotients(group):
        out.append(Theta2Entry(f"carry {phi.target.order}:{';'.join(phi.serialize())}", (pardini_ray(phi),)))
    for chi in sigma_enumerate(group, bar=True, max_order=bound):
        lam, dlt = lambda_delta(chi.r, chi.alpha, chi.N, chi.qbar, chi.phi)
        label = "pair {},{},{},{}:{}".format(*chi.numeric(), ";".join(chi.phi.serialize()))
        out.append(Theta2Entry(label, (lam, dlt)))
    return out


def projection_to_cyclic(r: int, alpha: int, N: int, kill_e1: bool) -> GroupHom:
    """Quotient of M_{r,alpha,N} by <e1> (or by <e2>), identified with Z/d."""
    tg = two_gen_group(r, alpha, N)
    M = tg.group
    killed = tg.e1 if kill_e1 else tg.e2
    sub = {M.zero}
    x = killed
    while x not in sub:
        sub.add(x)
        x = x + killed
    d = M.order // len(sub)
    if d == 1:
        raise DegenerateCase("quotient is trivial")
    # every element is a*e1 + b*e2; send it to the coefficient of the surviving generator
    target = make_group([d])
    imgs = []
    for gen in M.basis():
        a, b = tg.lift(gen)
        k = b if kill_e1 else a
        imgs.append(target.element(k))
    return GroupHom(M, target, tuple(imgs))
