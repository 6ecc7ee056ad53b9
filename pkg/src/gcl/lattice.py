"""The lattice Z^M/<e_0>, its sublattice K and the generators v_{m,n}.

Coordinates are indexed by the nonzero elements of M in enumeration order,
so element index ``i >= 1`` sits at coordinate ``i - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .abelian_group import Element, FiniteAbelianGroup
from .errors import GroupMismatch
from .intlinalg import hnf_rows, invariant_factors, inverse_rational, rank, same_lattice

Pair = tuple[int, int]


@dataclass(frozen=True)
class LatticeVector:
    group: FiniteAbelianGroup
    coords: tuple[int, ...]

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        if other.group != self.group:
            raise GroupMismatch("vectors live in different lattices")
        return LatticeVector(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        if other.group != self.group:
            raise GroupMismatch("vectors live in different lattices")
        return LatticeVector(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_json(self) -> dict[str, int]:
        els = self.group.elements
        return {els[i + 1].serialize(): c for i, c in enumerate(self.coords) if c}

    @classmethod
    def from_json(cls, group: FiniteAbelianGroup, data: dict[str, int]) -> "LatticeVector":
        coords = [0] * (group.order - 1)
        for key, val in data.items():
            i = group.index(group.parse_element(key))
            if i == 0:
                raise GroupMismatch("e_0 is not a coordinate")
            coords[i - 1] = int(val)
        return cls(group, tuple(coords))


def generator_coords(group: FiniteAbelianGroup, i: int, j: int) -> tuple[int, ...]:
    """Coordinates of v_{m,n} for element indices i, j."""
    c = [0] * (group.order - 1)
    k = group.add_table[i][j]
    if i:
        c[i - 1] += 1
    if j:
        c[j - 1] += 1
    if k:
        c[k - 1] -= 1
    return tuple(c)


def generator(m: Element, n: Element) -> LatticeVector:
    if m.group != n.group:
        raise GroupMismatch("elements of different groups")
    g = m.group
    return LatticeVector(g, generator_coords(g, m.index, n.index))


@dataclass(frozen=True)
class KGenerators:
    """The canonical generators of K and derived bookkeeping.

    ``pairs`` are index pairs ``(i, j)`` with ``1 <= i <= j``; ``reduced`` lists
    the positions (into ``pairs``) of the pairs with ``m + n != 0`` (all pairs
    when ``|M| = 2``, where no reduction is possible).
    """

    group: FiniteAbelianGroup
    pairs: tuple[Pair, ...]
    vectors: tuple[tuple[int, ...], ...]
    pair_index: dict
    reduced: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]
    basis_inverse: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return self.group.order - 1

    def position(self, i: int, j: int) -> int:
        return self.pair_index[(i, j)]

    def element_pairs(self) -> list[tuple[Element, Element]]:
        els = self.group.elements
        return [(els[i], els[j]) for i, j in self.pairs]

    def k_coords(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of a vector of K with respect to ``basis``."""
        inv = self.basis_inverse
        out = []
        for j in range(len(inv)):
            s = sum(vec[i] * inv[i][j] for i in range(len(vec)) if vec[i])
            if s.denominator != 1:
                raise ValueError("vector is not in K")
            out.append(int(s))
        return tuple(out)

    @property
    def generator_k_coords(self) -> tuple[tuple[int, ...], ...]:
        return _k_coords_cache(self.group)


@lru_cache(maxsize=None)
def k_generators(group: FiniteAbelianGroup) -> KGenerators:
    n = group.order
    neg = group.neg_table
    pairs = [(i, j) for i in range(1, n) for j in range(i, n)]
    vectors = tuple(generator_coords(group, i, j) for i, j in pairs)
    index = {}
    for k, (i, j) in enumerate(pairs):
        index[(i, j)] = k
        index[(j, i)] = k
    if n == 2:
        reduced = tuple(range(len(pairs)))
    else:
        reduced = tuple(k for k, (i, j) in enumerate(pairs) if neg[i] != j)
    basis = tuple(tuple(r) for r in hnf_rows(vectors, n - 1))
    inv = tuple(tuple(r) for r in inverse_rational(basis)) if basis else ()
    return KGenerators(group, tuple(pairs), vectors, index, reduced, basis, inv)


@lru_cache(maxsize=None)
def _k_coords_cache(group: FiniteAbelianGroup) -> tuple[tuple[int, ...], ...]:
    kg = k_generators(group)
    return tuple(kg.k_coords(v) for v in kg.vectors)


def canonical_pairs(group: FiniteAbelianGroup) -> list[tuple[Element, Element]]:
    return k_generators(group).element_pairs()


def k_basis(group: FiniteAbelianGroup) -> list[LatticeVector]:
    return [LatticeVector(group, v) for v in k_generators(group).basis]


def _rows(vectors: Sequence[LatticeVector | Sequence[int]]) -> list[tuple[int, ...]]:
    return [v.coords if isinstance(v, LatticeVector) else tuple(v) for v in vectors]


def span_equals_saturated(
    vectors: Sequence[LatticeVector | Sequence[int]],
    target_basis: Sequence[LatticeVector | Sequence[int]],
) -> bool:
    """True iff both families span the same sublattice."""
    a, b = _rows(vectors), _rows(target_basis)
    ncols = len((a or b or [()])[0])
    return same_lattice(a, b, ncols)


def lattice_rank(vectors: Sequence[LatticeVector | Sequence[int]]) -> int:
    return rank(_rows(vectors))


def is_saturated(rows: Sequence[Sequence[int]]) -> bool:
    """Whether the span of integer rows is saturated in the ambient Z^n."""
    rows = [r for r in rows if any(r)]
    return all(x == 1 for x in invariant_factors(rows)) if rows else True
