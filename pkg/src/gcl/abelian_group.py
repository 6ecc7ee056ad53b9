"""Finite abelian groups as products of cyclic groups.

Elements are canonical residue tuples and are enumerated in lexicographic
order. Internally most algorithms work with element *indices* into that
enumeration; the addition and negation tables are cached per group.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd, prod
from typing import Iterator, Sequence

from .errors import GroupMismatch, InvalidOrder, InvalidPresentation, InvalidTarget, NotGenerating
from .intlinalg import integer_inverse, smith_normal_form


@dataclass(frozen=True)
class FiniteAbelianGroup:
    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders", tuple(int(x) for x in self.cyclic_orders))
        for x in self.cyclic_orders:
            if x < 2:
                raise InvalidOrder(f"cyclic order {x} must be at least 2")

    @property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    def __len__(self) -> int:
        return self.order

    @cached_property
    def residues(self) -> tuple[tuple[int, ...], ...]:
        return tuple(itertools.product(*(range(l) for l in self.cyclic_orders)))

    @cached_property
    def elements(self) -> tuple["Element", ...]:
        return tuple(Element(self, r) for r in self.residues)

    def __iter__(self) -> Iterator["Element"]:
        return iter(self.elements)

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {r: i for i, r in enumerate(self.residues)}

    def index(self, x: "Element | Sequence[int]") -> int:
        if isinstance(x, Element):
            if x.group != self:
                raise GroupMismatch("element belongs to another group")
            return self._index[x.residues]
        return self._index[self._reduce(x)]

    def _reduce(self, residues: Sequence[int]) -> tuple[int, ...]:
        if len(residues) != len(self.cyclic_orders):
            raise GroupMismatch(f"expected {len(self.cyclic_orders)} residues, got {len(residues)}")
        return tuple(int(a) % l for a, l in zip(residues, self.cyclic_orders))

    def element(self, *residues: int) -> "Element":
        if len(residues) == 1 and isinstance(residues[0], (tuple, list)):
            residues = tuple(residues[0])
        return Element(self, self._reduce(residues))

    @property
    def zero(self) -> "Element":
        return Element(self, (0,) * len(self.cyclic_orders))

    def basis(self) -> list["Element"]:
        """The standard generators, one per cyclic factor."""
        k = len(self.cyclic_orders)
        return [Element(self, tuple(int(i == j) for j in range(k))) for i in range(k)]

    @cached_property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        res = self.residues
        idx = self._index
        ls = self.cyclic_orders
        return tuple(
            tuple(idx[tuple((a + b) % l for a, b, l in zip(x, y, ls))] for y in res) for x in res
        )

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        idx = self._index
        ls = self.cyclic_orders
        return tuple(idx[tuple((-a) % l for a, l in zip(x, ls))] for x in self.residues)

    @cached_property
    def order_table(self) -> tuple[int, ...]:
        out = []
        for x in self.residues:
            o = 1
            for a, l in zip(x, self.cyclic_orders):
                o = o * (l // gcd(a, l)) // gcd(o, l // gcd(a, l))
            out.append(o)
        return tuple(out)

    @property
    def exponent(self) -> int:
        return max(self.order_table)

    def serialize(self) -> str:
        return ",".join(str(x) for x in self.cyclic_orders)

    @classmethod
    def parse(cls, text: str) -> "FiniteAbelianGroup":
        text = text.strip()
        if text in ("", "0", "1"):
            return cls(())
        try:
            orders = [int(p) for p in text.split(",")]
        except ValueError as exc:
            raise InvalidOrder(f"cannot parse group {text!r}") from exc
        return cls(tuple(orders))

    def parse_element(self, text: str) -> "Element":
        text = text.strip()
        if not self.cyclic_orders:
            if text not in ("", "0"):
                raise GroupMismatch(f"{text!r} is not an element of the trivial group")
            return self.zero
        try:
            parts = [int(p) for p in text.split(".")]
        except ValueError as exc:
            raise GroupMismatch(f"cannot parse element {text!r}") from exc
        if len(parts) != len(self.cyclic_orders) or any(
            not 0 <= a < l for a, l in zip(parts, self.cyclic_orders)
        ):
            raise GroupMismatch(f"{text!r} is not a canonical element of Z/{self.serialize()}")
        return Element(self, tuple(parts))

    def __repr__(self) -> str:
        if not self.cyclic_orders:
            return "FiniteAbelianGroup(trivial)"
        return "FiniteAbelianGroup(" + " x ".join(f"Z/{l}" for l in self.cyclic_orders) + ")"


@dataclass(frozen=True, order=False)
class Element:
    group: FiniteAbelianGroup = field(repr=False)
    residues: tuple[int, ...]

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element) or other.group != self.group:
            raise GroupMismatch("operands belong to different groups")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return self.group.element(tuple(a + b for a, b in zip(self.residues, other.residues)))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return self.group.element(tuple(a - b for a, b in zip(self.residues, other.residues)))

    def __neg__(self) -> "Element":
        return self.group.element(tuple(-a for a in self.residues))

    def __mul__(self, k: int) -> "Element":
        return self.group.element(tuple(k * a for a in self.residues))

    __rmul__ = __mul__

    def __lt__(self, other: "Element") -> bool:
        self._check(other)
        return self.residues < other.residues

    @property
    def index(self) -> int:
        return self.group.index(self)

    @property
    def order(self) -> int:
        return self.group.order_table[self.index]

    def is_zero(self) -> bool:
        return not any(self.residues)

    def serialize(self) -> str:
        return ".".join(str(a) for a in self.residues)

    def __repr__(self) -> str:
        return self.serialize() or "0"


def make_group(orders: Sequence[int]) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(orders))


def add(x: Element, y: Element) -> Element:
    return x + y


def neg(x: Element) -> Element:
    return -x


def order_of(x: Element) -> int:
    return x.order


def generated_subgroup(group: FiniteAbelianGroup, gens: Sequence[int]) -> frozenset[int]:
    """Indices of the subgroup generated by the given element indices."""
    add_t = group.add_table
    seen = {0}
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = add_t[x][g]
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return frozenset(seen)


@dataclass(frozen=True)
class GroupHom:
    source: FiniteAbelianGroup
    target: FiniteAbelianGroup
    generator_images: tuple[Element, ...]

    def __post_init__(self):
        imgs = tuple(self.generator_images)
        object.__setattr__(self, "generator_images", imgs)
        if len(imgs) != len(self.source.cyclic_orders):
            raise GroupMismatch("one image per cyclic factor of the source is required")
        for l, img in zip(self.source.cyclic_orders, imgs):
            if img.group != self.target:
                raise GroupMismatch("image outside the target group")
            if not (l * img).is_zero():
                raise GroupMismatch(f"image {img!r} is not killed by {l}")

    @cached_property
    def table(self) -> tuple[int, ...]:
        """Index of the image of each source element (by source index)."""
        tgt = self.target
        imgs = [img.residues for img in self.generator_images]
        out = []
        for res in self.source.residues:
            acc = [0] * len(tgt.cyclic_orders)
            for a, img in zip(res, imgs):
                if a:
                    acc = [u + a * v for u, v in zip(acc, img)]
            out.append(tgt.index(acc))
        return tuple(out)

    def __call__(self, x: Element) -> Element:
        return self.target.elements[self.table[self.source.index(x)]]

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.target.order

    def kernel(self) -> frozenset[int]:
        return frozenset(i for i, j in enumerate(self.table) if j == 0)

    def compose_after(self, other: "GroupHom") -> "GroupHom":
        """``self ∘ other``."""
        if other.target != self.source:
            raise GroupMismatch("cannot compose: target/source mismatch")
        return GroupHom(other.source, self.target, tuple(self(img) for img in other.generator_images))

    def serialize(self) -> list[str]:
        return [img.serialize() for img in self.generator_images]

    def __repr__(self) -> str:
        return f"GroupHom({self.source.serialize()} -> {self.target.serialize()}: {self.serialize()})"


def identity_hom(group: FiniteAbelianGroup) -> GroupHom:
    return GroupHom(group, group, tuple(group.basis()))


def all_homs(source: FiniteAbelianGroup, target: FiniteAbelianGroup) -> list[GroupHom]:
    """All homomorphisms, ordered lexicographically by generator images."""
    choices = []
    for l in source.cyclic_orders:
        choices.append([y for y in target.elements if (l * y).is_zero()])
    return [GroupHom(source, target, imgs) for imgs in itertools.product(*choices)]


def surjections(source: FiniteAbelianGroup, target: FiniteAbelianGroup) -> list[GroupHom]:
    if target.order == 0 or source.order % target.order:
        return []
    return [h for h in all_homs(source, target) if h.is_surjective()]


def surjections_onto_cyclic(group: FiniteAbelianGroup, d: int) -> list[GroupHom]:
    if d <= 1:
        raise InvalidTarget(f"target order {d} must exceed 1")
    return surjections(group, make_group([d]))


def cyclic_quotients(group: FiniteAbelianGroup) -> list[GroupHom]:
    """The set of all surjections onto some Z/d with d > 1, ordered by d."""
    out: list[GroupHom] = []
    for d in range(2, group.order + 1):
        if group.order % d == 0:
            out.extend(surjections_onto_cyclic(group, d))
    return out


@dataclass(frozen=True)
class TwoGenPresentation:
    r: int
    alpha: int
    N: int

    def __post_init__(self):
        if not (self.r > 0 and self.N > 1 and 0 <= self.alpha < self.N):
            raise InvalidPresentation(
                f"need r > 0, N > 1, 0 <= alpha < N; got (r, alpha, N) = ({self.r}, {self.alpha}, {self.N})"
            )

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.r, self.alpha, self.N)


@dataclass(frozen=True)
class TwoGenGroup:
    """Z^2 / <(r, -alpha), (0, N)> realised as a product of cyclic groups.

    ``transform`` maps integer row vectors (a, b) to residues via ``(a, b) @ V``,
    dropping the unit invariant factors; ``lift`` goes back using ``V^-1``.
    """

    presentation: TwoGenPresentation
    group: FiniteAbelianGroup
    e1: Element
    e2: Element
    factors: tuple[int, ...]
    v: tuple[tuple[int, ...], ...]
    v_inv: tuple[tuple[int, ...], ...]

    def image(self, a: int, b: int) -> Element:
        coords = [a * self.v[0][j] + b * self.v[1][j] for j in range(2)]
        kept = [c for c, d in zip(coords, self.factors) if d != 1]
        return self.group.element(tuple(kept))

    def lift(self, x: Element) -> tuple[int, int]:
        """Some (a, b) in Z^2 with a*e1 + b*e2 = x."""
        it = iter(x.residues)
        padded = [next(it) if d != 1 else 0 for d in self.factors]
        return (
            sum(padded[k] * self.v_inv[k][0] for k in range(2)),
            sum(padded[k] * self.v_inv[k][1] for k in range(2)),
        )


@lru_cache(maxsize=None)
def _two_gen(r: int, alpha: int, N: int) -> TwoGenGroup:
    pres = TwoGenPresentation(r, alpha, N)
    d, _, v = smith_normal_form([[r, -alpha], [0, N]])
    factors = (d[0][0], d[1][1])
    group = make_group([x for x in factors if x != 1])
    vt = tuple(tuple(row) for row in v)
    vi = tuple(tuple(row) for row in integer_inverse(v))
    tg = TwoGenGroup(pres, group, group.zero, group.zero, factors, vt, vi)
    e1 = tg.image(1, 0)
    e2 = tg.image(0, 1)
    return TwoGenGroup(pres, group, e1, e2, factors, vt, vi)


def two_gen_group(r: int, alpha: int, N: int) -> TwoGenGroup:
    return _two_gen(int(r), int(alpha), int(N))


def two_generator_group(r: int, alpha: int, N: int) -> tuple[FiniteAbelianGroup, Element, Element]:
    tg = two_gen_group(r, alpha, N)
    return tg.group, tg.e1, tg.e2


def two_gen_type(group: FiniteAbelianGroup, m: Element, n: Element) -> TwoGenPresentation:
    if m.group != group or n.group != group:
        raise GroupMismatch("elements outside the group")
    mi, ni = m.index, n.index
    if len(generated_subgroup(group, [mi, ni])) != group.order:
        raise NotGenerating(f"{m!r} and {n!r} do not generate the group")
    span_n = generated_subgroup(group, [ni])
    N = group.order_table[ni]
    s, x = 1, mi
    while x not in span_n:
        s += 1
        x = group.add_table[x][mi]
    y, alpha = 0, 0
    while y != x:
        y = group.add_table[y][ni]
        alpha += 1
    if N == 1:
        raise InvalidPresentation("n must be nonzero")
    return TwoGenPresentation(s, alpha % N, N)


def surjections_onto_two_gen(group: FiniteAbelianGroup, pres: TwoGenPresentation) -> list[GroupHom]:
    tg = two_gen_group(*pres.as_tuple())
    return surjections(group, tg.group)


def abelian_groups_of_order(n: int) -> list[FiniteAbelianGroup]:
    """All groups of order n up to isomorphism, in invariant-factor form."""
    if n == 1:
        return [make_group([])]
    out = []

    def rec(remaining: int, last: int, acc: list[int]):
        # acc holds invariant factors from largest down; each divides the previous
        if remaining == 1:
            out.append(make_group(list(reversed(acc))))
            return
        for d in range(2, remaining + 1):
            if remaining % d == 0 and (last == 0 or last % d == 0):
                rec(remaining // d, d, acc + [d])

    rec(n, 0, [])
    # keep only decompositions with the largest factor first
    seen, uniq = set(), []
    for g in out:
        key = g.cyclic_orders
        if key not in seen:
            seen.add(key)
            uniq.append(g)
    return sorted(uniq, key=lambda g: (len(g.cyclic_orders), g.cyclic_orders))


def abelian_groups_up_to(n: int) -> list[FiniteAbelianGroup]:
    out = []
    for k in range(1, n + 1):
        out.extend(abelian_groups_of_order(k))
    return out


def is_elementary(group: FiniteAbelianGroup, p: int) -> bool:
    """True for (Z/p)^l with l >= 1."""
    return bool(group.cyclic_orders) and all(l == p for l in group.cyclic_orders)
