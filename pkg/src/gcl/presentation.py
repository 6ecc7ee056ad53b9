"""Binomial presentation of the ring of multiplication structures.

Variables are the pairs {m,n} with m, n, m+n != 0 (for Z/2 the single pair
{1,1}); a monomial is a sorted tuple of variable positions.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .abelian_group import Element, FiniteAbelianGroup
from .graded_algebra import MGradedAlgebra
from .lattice import k_generators

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class RMPresentation:
    group: FiniteAbelianGroup
    variables: tuple[tuple[int, int], ...]
    relations: tuple[tuple[Monomial, Monomial], ...]

    def variable_index(self, i: int, j: int) -> int:
        return _var_index(self.group)[(min(i, j), max(i, j))]

    def variable_names(self) -> list[str]:
        els = self.group.elements
        return [f"{els[i].serialize()},{els[j].serialize()}" for i, j in self.variables]

    def exponent_vector(self, mono: Monomial) -> dict[str, int]:
        names = self.variable_names()
        return {names[k]: c for k, c in sorted(Counter(mono).items())}

    def relation_json(self) -> list[dict]:
        return [{"alpha": self.exponent_vector(a), "beta": self.exponent_vector(b)} for a, b in self.relations]

    def contains(self, lhs: list[tuple[Element, Element]], rhs: list[tuple[Element, Element]]) -> bool:
        """Whether the binomial prod(lhs) - prod(rhs) is stored, up to sign."""
        a = tuple(sorted(self.variable_index(m.index, n.index) for m, n in lhs))
        b = tuple(sorted(self.variable_index(m.index, n.index) for m, n in rhs))
        return (min(a, b), max(a, b)) in set(self.relations)


@lru_cache(maxsize=None)
def _var_index(group: FiniteAbelianGroup) -> dict[tuple[int, int], int]:
    kg = k_generators(group)
    return {kg.pairs[k]: pos for pos, k in enumerate(kg.reduced)}


def _mono(group: FiniteAbelianGroup, *pairs: tuple[int, int]) -> Monomial:
    idx = _var_index(group)
    return tuple(sorted(idx[(min(i, j), max(i, j))] for i, j in pairs))


@lru_cache(maxsize=None)
def rm_presentation(group: FiniteAbelianGroup) -> RMPresentation:
    kg = k_generators(group)
    add_t, neg_t = group.add_table, group.neg_table
    n = group.order
    rels: set[tuple[Monomial, Monomial]] = set()

    def push(a: Monomial, b: Monomial) -> None:
        if a != b:
            rels.add((min(a, b), max(a, b)))

    nz = range(1, n)
    for m in nz:
        for k in nz:
            mk = add_t[m][k]
            if mk == 0:
                continue
            for t in nz:
                kt = add_t[k][t]
                if t == m or kt == 0 or add_t[mk][t] == 0:
                    continue
                push(_mono(group, (m, k), (mk, t)), _mono(group, (k, t), (kt, m)))
    for m in nz:
        mm = neg_t[m]
        for s in nz:
            for t in nz:
                if len({m, s, t}) < 3:
                    continue
                push(_mono(group, (mm, t), (add_t[mm][t], m)), _mono(group, (mm, s), (add_t[mm][s], m)))
    variables = tuple(kg.pairs[k] for k in kg.reduced)
    return RMPresentation(group, variables, tuple(sorted(rels)))


def is_polynomial_presentation(group: FiniteAbelianGroup) -> bool:
    return not rm_presentation(group).relations


def relations_vanish_on(alg: MGradedAlgebra) -> bool:
    pres = rm_presentation(alg.group)
    values = [alg.mult(i, j) for i, j in pres.variables]
    one = alg.ring.one

    def ev(mono: Monomial):
        out = one
        for k in mono:
            out = out * values[k]
        return out

    return all(ev(a) == ev(b) for a, b in pres.relations)


@dataclass(frozen=True)
class ReducibilityWitness:
    m: Element
    n: Element
    t: Element
    a: Element
    alpha: Monomial
    beta: Monomial

    def to_json(self, pres: RMPresentation) -> dict:
        return {
            "tuple": [x.serialize() for x in (self.m, self.n, self.t, self.a)],
            "alpha": pres.exponent_vector(self.alpha),
            "beta": pres.exponent_vector(self.beta),
        }


def witness_conditions(m: Element, n: Element, t: Element, a: Element) -> bool:
    """Admissibility of (m, n, t, a): distinct nonzero m, n, t and a outside the excluded differences."""
    z = m.group.zero
    if len({m, n, t}) < 3 or z in (m, n, t):
        return False
    banned = {z, m, n, t, m - n, n - m, n - t, t - n, m - t, 2 * m - t, 2 * n - t, m + n - t, m + n - 2 * t}
    return a not in banned and 2 * a != m + n - t


def _witness_pairs(m, n, t, a):
    alpha = [(a, m - a), (m + n - t - a, t + a - m), (t + a - n, n - a)]
    beta = [(m + n - t - a, t + a - n), (a, n - a), (m - a, t + a - m)]
    return alpha, beta


def build_witness(m: Element, n: Element, t: Element, a: Element) -> Optional[ReducibilityWitness]:
    """The witness for a given tuple, or None if the tuple is not admissible."""
    if not witness_conditions(m, n, t, a):
        return None
    idx = _var_index(m.group)
    alpha, beta = _witness_pairs(m, n, t, a)
    keys = []
    for side in (alpha, beta):
        ks = []
        for u, v in side:
            key = (min(u.index, v.index), max(u.index, v.index))
            if key not in idx:
                return None
            ks.append(idx[key])
        keys.append(tuple(sorted(ks)))
    if keys[0] == keys[1]:
        return None
    return ReducibilityWitness(m, n, t, a, keys[0], keys[1])


def reducibility_witness(group: FiniteAbelianGroup) -> Optional[ReducibilityWitness]:
    els = group.elements
    for m in els:
        for n in els:
            for t in els:
                if len({m, n, t}) < 3 or group.zero in (m, n, t):
                    continue
                for a in els:
                    w = build_witness(m, n, t, a)
                    if w is not None:
                        return w
    return None
