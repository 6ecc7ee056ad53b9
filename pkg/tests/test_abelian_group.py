import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from gcl.abelian_group import (
    FiniteAbelianGroup,
    TwoGenPresentation,
    abelian_groups_of_order,
    abelian_groups_up_to,
    add,
    all_homs,
    generated_subgroup,
    make_group,
    neg,
    order_of,
    surjections_onto_cyclic,
    surjections_onto_two_gen,
    two_gen_type,
    two_generator_group,
)
from gcl.errors import GroupMismatch, InvalidOrder, InvalidPresentation, InvalidTarget, NotGenerating


def test_make_group_examples():
    assert make_group([]).order == 1
    assert make_group([4]).order == 4
    assert make_group([2, 2]).order == 4
    assert [x.residues for x in make_group([2, 3]).elements][:3] == [(0, 0), (0, 1), (0, 2)]
    with pytest.raises(InvalidOrder):
        make_group([1])
    with pytest.raises(InvalidOrder):
        make_group([4, 0])


def test_element_ops_examples():
    z4 = make_group([4])
    assert add(z4.element(3), z4.element(3)) == z4.element(2)
    assert order_of(z4.element(2)) == 2
    k = make_group([2, 2])
    assert neg(k.element(1, 0)) == k.element(1, 0)
    with pytest.raises(GroupMismatch):
        add(z4.element(1), k.element(1, 0))


def test_serialization_round_trip():
    g = FiniteAbelianGroup.parse("2,4")
    assert g.cyclic_orders == (2, 4)
    assert g.serialize() == "2,4"
    assert g.parse_element("1.3") == g.element(1, 3)
    assert g.element(1, 3).serialize() == "1.3"
    assert FiniteAbelianGroup.parse("").order == 1


def test_surjections_onto_cyclic_examples():
    z4 = make_group([4])
    homs = surjections_onto_cyclic(z4, 4)
    assert [h.serialize() for h in homs] == [["1"], ["3"]]
    assert len(surjections_onto_cyclic(z4, 2)) == 1
    assert surjections_onto_cyclic(make_group([2, 2]), 4) == []
    with pytest.raises(InvalidTarget):
        surjections_onto_cyclic(z4, 1)


@pytest.mark.parametrize("orders", [[2], [3], [4], [2, 2], [6], [2, 4], [2, 2, 2], [3, 3], [4, 4], [2, 8]])
@pytest.mark.parametrize("d", [2, 3, 4, 6, 8])
def test_surjections_match_brute_force(orders, d):
    g = make_group(orders)
    ours = sorted(tuple(x.residues[0] for x in h.generator_images) for h in surjections_onto_cyclic(g, d))
    theirs = sorted(i for i in oracles.homs_to_cyclic(orders, d) if oracles.surjective(orders, i, d))
    assert ours == theirs
    # count = number of elements of order d in the (isomorphic) dual group
    assert len(ours) == sum(1 for x in g.elements if x.order == d)


def test_two_generator_group_examples():
    g, e1, e2 = two_generator_group(1, 3, 4)
    assert g.cyclic_orders == (4,) and e2 == g.element(1) and e1 == g.element(3)
    g, e1, e2 = two_generator_group(2, 0, 2)
    assert g.cyclic_orders == (2, 2) and e1 == g.element(1, 0) and e2 == g.element(0, 1)
    g, e1, e2 = two_generator_group(1, 1, 2)
    assert g.cyclic_orders == (2,) and e1 == e2 == g.element(1)
    with pytest.raises(InvalidPresentation):
        two_generator_group(1, 4, 4)
    with pytest.raises(InvalidPresentation):
        TwoGenPresentation(0, 0, 2)


def test_two_gen_type_examples():
    z4 = make_group([4])
    assert two_gen_type(z4, z4.element(1), z4.element(3)).as_tuple() == (1, 3, 4)
    k = make_group([2, 2])
    assert two_gen_type(k, k.element(1, 0), k.element(0, 1)).as_tuple() == (2, 0, 2)
    z6 = make_group([6])
    assert two_gen_type(z6, z6.element(2), z6.element(3)).as_tuple() == (3, 0, 2)
    with pytest.raises(NotGenerating):
        two_gen_type(z6, z6.element(2), z6.element(4))


def test_surjections_onto_two_gen_examples():
    assert len(surjections_onto_two_gen(make_group([4]), TwoGenPresentation(1, 3, 4))) == 2
    assert surjections_onto_two_gen(make_group([2]), TwoGenPresentation(1, 3, 4)) == []
    assert len(surjections_onto_two_gen(make_group([2, 2]), TwoGenPresentation(2, 0, 2))) == 6


valid_tuples = st.tuples(st.integers(1, 8), st.integers(2, 8)).flatmap(
    lambda rn: st.tuples(st.just(rn[0]), st.integers(0, rn[1] - 1), st.just(rn[1]))
)


@given(valid_tuples)
def test_two_gen_order_and_round_trip(t):
    r, alpha, N = t
    g, e1, e2 = two_generator_group(r, alpha, N)
    assert g.order == r * N
    assert e2.order == N
    assert r * e1 == alpha * e2
    if r > 1 or alpha > 1:
        assert two_gen_type(g, e1, e2).as_tuple() == t


def test_two_gen_order_bound_exhaustive():
    for r in range(1, 25):
        for N in range(2, 49 // r + 1):
            if r * N > 48:
                continue
            for alpha in range(N):
                assert two_generator_group(r, alpha, N)[0].order == r * N


def test_group_lists():
    assert [g.serialize() for g in abelian_groups_of_order(8)] == ["8", "2,4", "2,2,2"]
    assert len(abelian_groups_up_to(16)) == 25
    assert len(abelian_groups_up_to(9)) == 13


def test_homs_and_kernel():
    z4, z2 = make_group([4]), make_group([2])
    homs = all_homs(z4, z2)
    assert len(homs) == 2
    nontrivial = [h for h in homs if h.is_surjective()][0]
    assert sorted(nontrivial.kernel()) == [0, 2]
    assert generated_subgroup(z4, [2]) == frozenset({0, 2})
