import random

import pytest

from permdec import (
    BudgetExceeded,
    Coset,
    CosetAction,
    PermGroup,
    Permutation,
    block_systems,
    centraliser_in_symmetric,
    coset_intersection,
    group_from_generators,
    intersect,
    is_innately_transitive,
    minimal_normal_subgroups,
    normal_closure,
    normaliser_in,
    setwise_stabiliser,
)
from permdec.structure import interval_subgroups, partition_from_block

C = Permutation.from_cycles


@pytest.fixture(scope="module")
def s6():
    return PermGroup([C(6, [tuple(range(6))]), C(6, [(0, 1)])], name="S6")


# --- backtrack searches against enumeration oracles --------------------------


def random_subgroup(parent, rng, k=2):
    return group_from_generators([parent.random_element(rng) for _ in range(k)], parent.degree)


def test_intersection_matches_enumeration(s6):
    rng = random.Random(101)
    for _ in range(25):
        a = random_subgroup(s6, rng)
        b = random_subgroup(s6, rng)
        want = a.element_set() & b.element_set()
        got = intersect(a, b)
        assert got.order() == len(want)
        assert got.element_set() == want


def test_setwise_stabiliser_matches_enumeration(s6):
    rng = random.Random(202)
    for _ in range(25):
        g = random_subgroup(s6, rng)
        block = rng.sample(range(6), rng.randrange(1, 6))
        want = {x for x in g.elements() if x.act_on_set(block) == frozenset(block)}
        got = setwise_stabiliser(g, block)
        assert got.element_set() == want


def test_coset_intersection_matches_enumeration(s6):
    rng = random.Random(303)
    for _ in range(25):
        a = random_subgroup(s6, rng)
        b = random_subgroup(s6, rng)
        x, y = s6.random_element(rng), s6.random_element(rng)
        want = {e * x for e in a.elements()} & {e * y for e in b.elements()}
        got = coset_intersection([(a, x), (b, y)])
        if got is None:
            assert not want
        else:
            assert set(got.elements()) == want


def test_coset_equality():
    k = PermGroup([C(4, [(0, 1)])])
    x = C(4, [(2, 3)])
    y = C(4, [(0, 1), (2, 3)])
    assert Coset(k, x) == Coset(k, y)
    assert Coset(k, x) != Coset(k, C(4, [(1, 2)]))


def test_intersection_budget():
    # neither group contains the other, so the backtrack search must run
    a = PermGroup([C(6, [(0, 1, 2, 3, 4, 5)])])
    b = PermGroup([C(6, [(0, 1)]), C(6, [(2, 3, 4, 5)])])
    with pytest.raises(BudgetExceeded):
        intersect(a, b, node_budget=2)


# --- block systems ------------------------------------------------------------


def test_block_systems_d8():
    d8 = PermGroup([C(4, [(0, 1, 2, 3)]), C(4, [(1, 3)])])
    systems = block_systems(d8)
    nontrivial = [p for p in systems if not p.is_trivial()]
    assert len(nontrivial) == 1
    assert nontrivial[0].blocks == ((0, 2), (1, 3))


def test_block_systems_c6():
    c6 = PermGroup([C(6, [tuple(range(6))])])
    sizes = sorted(p.block_sizes()[0] for p in block_systems(c6))
    assert sizes == [1, 2, 3, 6]


def test_interval_subgroup_orders_match_blocks(s3s3):
    for block, sub in interval_subgroups(s3s3, 0):
        # |stabiliser of the block| = |point stabiliser| * |block|
        assert sub.order() == 4 * len(block)


def test_partition_from_block(s3s3):
    p = partition_from_block(s3s3, frozenset({0, 1, 2}))
    assert p.blocks == ((0, 1, 2), (3, 4, 5), (6, 7, 8))


# --- normal structure -----------------------------------------------------------


def test_minimal_normal_subgroups_s4(s4):
    minimals = minimal_normal_subgroups(s4)
    assert [n.order() for n in minimals] == [4]


def test_minimal_normal_subgroups_klein(klein):
    minimals = minimal_normal_subgroups(klein)
    assert [n.order() for n in minimals] == [2, 2, 2]
    report = is_innately_transitive(klein)
    assert not report.innately_transitive


def test_innately_transitive_a6(a6):
    report = is_innately_transitive(a6)
    assert report.innately_transitive and report.quasiprimitive
    assert report.plinths[0].same_group(a6)


def test_normal_closure(s4):
    n = normal_closure(s4, [C(4, [(0, 1), (2, 3)])])
    assert n.order() == 4
    n = normal_closure(s4, [C(4, [(0, 1, 2)])])
    assert n.order() == 12


def test_minimal_normals_budget(a6):
    with pytest.raises(BudgetExceeded):
        minimal_normal_subgroups(a6, bound=10)


def test_centraliser_regular_abelian(klein):
    assert centraliser_in_symmetric(klein).order() == 4


def test_centraliser_trivial(a6):
    assert centraliser_in_symmetric(a6).order() == 1


def test_normaliser(s4, klein):
    assert normaliser_in(s4, klein).order() == 24
    a3 = PermGroup([C(4, [(0, 1, 2)])])
    # N_S4(A3) = S3 on {0,1,2}
    assert normaliser_in(s4, a3).order() == 6


# --- coset actions --------------------------------------------------------------


def test_coset_action_s4(s4):
    s3 = setwise_stabiliser(s4, [0])
    action = CosetAction(s4, s3)
    assert action.degree == 4
    assert action.is_faithful()
    assert action.image.order() == 24


def test_coset_action_kernel():
    # action of V4 on cosets of an order-2 subgroup is not faithful
    v = PermGroup([C(4, [(0, 1), (2, 3)]), C(4, [(0, 2), (1, 3)])])
    sub = PermGroup([C(4, [(0, 1), (2, 3)])])
    action = CosetAction(v, sub)
    assert action.degree == 2
    assert not action.is_faithful()


def test_coset_action_maps_subgroups(a6):
    b = PermGroup([C(6, [(0, 1, 2, 3, 4)]), C(6, [(0, 5), (1, 4)])])
    action = CosetAction(a6, b)
    assert action.degree == 6
    img = action.map_subgroup(a6)
    assert img.order() == 360
