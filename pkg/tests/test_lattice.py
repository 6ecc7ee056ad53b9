import pytest

from gcl.abelian_group import abelian_groups_up_to, make_group
from gcl.lattice import (
    LatticeVector,
    canonical_pairs,
    generator,
    k_basis,
    k_generators,
    lattice_rank,
    span_equals_saturated,
)

GROUPS_9 = abelian_groups_up_to(9)


def test_generator_examples():
    z3 = make_group([3])
    assert generator(z3.element(1), z3.element(1)).coords == (2, -1)
    z4 = make_group([4])
    assert generator(z4.element(1), z4.element(3)).coords == (1, 0, 1)
    for m in z4.elements:
        assert generator(m, z4.zero).is_zero()


def test_k_basis_examples():
    z2 = make_group([2])
    assert [v.coords for v in k_basis(z2)] == [(2,)]
    z3 = make_group([3])
    v11, v12, v22 = (generator(z3.element(i), z3.element(j)) for i, j in [(1, 1), (1, 2), (2, 2)])
    assert v12 == v11 + v22
    assert span_equals_saturated([v11, v22], k_basis(z3))
    assert k_basis(make_group([])) == []


def test_span_equals_saturated_examples():
    g = make_group([3])  # ambient Z^2
    e1, e2 = LatticeVector(g, (1, 0)), LatticeVector(g, (0, 1))
    assert not span_equals_saturated([LatticeVector(g, (2, 0))], [e1])
    assert span_equals_saturated([e1, e2], [e1 + e2, e2])


@pytest.mark.parametrize("group", GROUPS_9, ids=lambda g: g.serialize() or "0")
def test_symmetry_cocycle_rank(group):
    els = group.elements
    for m in els:
        for n in els:
            assert generator(m, n) == generator(n, m)
            for t in els:
                assert generator(m, n) + generator(m + n, t) == generator(n, t) + generator(n + t, m)
    vecs = [generator(m, n) for m, n in canonical_pairs(group)]
    assert lattice_rank(vecs) == group.order - 1 if vecs else group.order == 1
    assert len(k_basis(group)) == group.order - 1


@pytest.mark.parametrize("group", GROUPS_9, ids=lambda g: g.serialize() or "0")
def test_k_is_kernel_of_evaluation(group):
    """Basis vectors map to 0 in M, and K has index |M| in Z^{M-0}."""
    from gcl.intlinalg import invariant_factors

    basis = k_basis(group)
    for v in basis:
        total = group.zero
        for i, c in enumerate(v.coords):
            total = total + c * group.elements[i + 1]
        assert total.is_zero()
    if basis:
        index = 1
        for x in invariant_factors([v.coords for v in basis]):
            index *= x
        assert index == group.order


def test_lattice_json_round_trip():
    g = make_group([2, 4])
    v = generator(g.element(1, 1), g.element(0, 3))
    assert LatticeVector.from_json(g, v.to_json()) == v
    kg = k_generators(g)
    assert len(kg.pairs) == 7 * 8 // 2
