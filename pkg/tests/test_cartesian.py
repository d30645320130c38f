import random
from itertools import combinations

import pytest

from permdec import (
    BudgetExceeded,
    CartesianDecomposition,
    CartesianSystem,
    DegreeMismatch,
    InvalidSystem,
    NotInnatelyTransitive,
    NotInvariant,
    Partition,
    PermGroup,
    Permutation,
    covariance_check,
    enumerate_cartesian_decompositions,
    intersect,
    is_invariant,
    plinth_fixes_partitions,
    round_trip_check,
    to_decomposition,
    to_system,
    validate_decomposition,
    validate_system,
)
from permdec.brute import brute_force_decompositions, product_set
from permdec.wreath import natural_decomposition, product_action_wreath, WreathSpec

C = Permutation.from_cycles

GRID = CartesianDecomposition(
    [Partition([(0, 1), (2, 3)]), Partition([(0, 2), (1, 3)])]
)


def test_grid_is_valid():
    report = validate_decomposition(GRID)
    assert report.valid and report.index == 2 and report.homogeneous


def test_duplicated_partition_invalid():
    e = CartesianDecomposition([Partition([(0, 1), (2, 3)]), Partition([(2, 3), (0, 1)])])
    report = validate_decomposition(e)
    assert not report.valid
    assert report.witness is not None  # an intersection of size 2


def test_natural_decomposition_valid():
    _, e = product_action_wreath(WreathSpec(3, 2))
    report = validate_decomposition(e)
    assert report.valid and report.homogeneous and e.degree == 9


def test_validation_budget():
    e = natural_decomposition((20, 20, 30))  # 12000 block choices
    with pytest.raises(BudgetExceeded):
        validate_decomposition(e, cap=10**3)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        CartesianDecomposition([Partition([(0, 1), (2, 3)]), Partition([(0, 1, 2), (3, 4, 5)])])


# --- invariance -----------------------------------------------------------------


def test_klein_invariance(klein):
    report = is_invariant(klein, GRID)
    assert report.invariant
    # both generators fix both partitions
    assert all(action == (0, 1) for action in report.generator_actions)


def test_s4_moves_grid(s4):
    report = is_invariant(s4, GRID)
    assert not report.invariant
    assert report.witness is not None


def test_wreath_swaps_partitions():
    w, e = product_action_wreath(WreathSpec(3, 2))
    report = is_invariant(w, e)
    assert report.invariant
    assert any(action == (1, 0) for action in report.generator_actions)


# --- to_system ----------------------------------------------------------------


def test_klein_to_system(klein):
    system = to_system(klein, GRID, 0)
    orders = sorted(k.order() for k in system.subgroups)
    assert orders == [2, 2]
    expect = [PermGroup([C(4, [(0, 1), (2, 3)])]), PermGroup([C(4, [(0, 2), (1, 3)])])]
    matched = {i for k in system.subgroups for i, e in enumerate(expect) if k.same_group(e)}
    assert matched == {0, 1}


def test_s3s3_rows_columns(s3s3):
    base = PermGroup(s3s3.generators, degree=9)  # S3 x S3 fixes rows and columns
    e = natural_decomposition((3, 3))
    system = to_system(base, e, 0)
    assert sorted(k.order() for k in system.subgroups) == [12, 12]
    inter = intersect(system.subgroups[0], system.subgroups[1])
    assert inter.same_group(base.point_stabiliser(0))
    assert inter.order() == 4


def test_a6_36_to_system(a6_36):
    decs = enumerate_cartesian_decompositions(a6_36, plinth=a6_36)
    system = to_system(a6_36, decs[0], 0)
    assert sorted(k.order() for k in system.subgroups) == [60, 60]


def test_to_system_requires_invariance(s4):
    with pytest.raises(NotInvariant):
        to_system(s4, GRID, 0)


# --- covariance ------------------------------------------------------------------


def test_covariance_identity(klein):
    assert covariance_check(klein, GRID, 0, klein.identity)


def test_covariance_klein(klein):
    assert covariance_check(klein, GRID, 0, C(4, [(0, 1), (2, 3)]))


def test_covariance_a6(a6_36):
    rng = random.Random(5)
    e = enumerate_cartesian_decompositions(a6_36, plinth=a6_36)[0]
    for _ in range(3):
        m = a6_36.random_element(rng)
        assert covariance_check(a6_36, e, 0, m)


# --- systems ----------------------------------------------------------------------


def test_validate_system_klein(klein):
    k1 = PermGroup([C(4, [(0, 1), (2, 3)])])
    k2 = PermGroup([C(4, [(0, 2), (1, 3)])])
    report = validate_system(CartesianSystem(klein, 0, [k1, k2]))
    assert report.valid and report.eq1 and all(report.eq2)
    assert report.omega_prediction == 4


def test_duplicated_subgroup_fails_eq2(klein):
    k1 = PermGroup([C(4, [(0, 1), (2, 3)])])
    report = validate_system(CartesianSystem(klein, 0, [k1, k1]))
    assert not report.valid
    assert not all(report.eq2)


def test_a6_system_omega_prediction(a6_36):
    e = enumerate_cartesian_decompositions(a6_36, plinth=a6_36)[0]
    report = validate_system(to_system(a6_36, e, 0))
    assert report.valid
    assert report.omega_prediction == 36


# --- to_decomposition and round trips ------------------------------------------------


def test_klein_system_to_decomposition(klein):
    k1 = PermGroup([C(4, [(0, 1), (2, 3)])])
    k2 = PermGroup([C(4, [(0, 2), (1, 3)])])
    e = to_decomposition(CartesianSystem(klein, 0, [k1, k2]))
    assert e == GRID


def test_invalid_system_raises(klein):
    k1 = PermGroup([C(4, [(0, 1), (2, 3)])])
    with pytest.raises(InvalidSystem):
        to_decomposition(CartesianSystem(klein, 0, [k1, k1]))


def test_round_trip_klein(klein):
    report = round_trip_check(klein, plinth=klein)
    assert report.ok and report.decomposition_count == 3


def test_round_trip_s4_vacuous(s4):
    report = round_trip_check(s4)
    assert report.ok and report.decomposition_count == 0


def test_round_trip_a6(a6_36):
    report = round_trip_check(a6_36, plinth=a6_36)
    assert report.ok and report.decomposition_count == 1


# --- plinth fixes partitions ---------------------------------------------------------


def test_plinth_fixes_partitions(klein):
    assert plinth_fixes_partitions(klein, GRID)
    moved = PermGroup([C(4, [(0, 1)])])
    assert not plinth_fixes_partitions(moved, GRID)


# --- enumeration -----------------------------------------------------------------------


def test_enumerate_s4_empty(s4):
    assert enumerate_cartesian_decompositions(s4) == []


def test_enumerate_klein(klein):
    decs = enumerate_cartesian_decompositions(klein, plinth=klein)
    assert len(decs) == 3
    assert all(e.index == 2 and e.is_homogeneous() for e in decs)


def test_enumerate_a6(a6_36):
    decs = enumerate_cartesian_decompositions(a6_36, plinth=a6_36)
    assert len(decs) == 1
    assert decs[0].index == 2 and decs[0].is_homogeneous()


def test_enumerate_requires_plinth(s3s3):
    with pytest.raises(NotInnatelyTransitive):
        enumerate_cartesian_decompositions(s3s3)


def test_enumerate_matches_oracle_s3s3(s3s3):
    plinth = PermGroup([s3s3.generators[0], s3s3.generators[2]], degree=9)
    got = enumerate_cartesian_decompositions(s3s3, plinth=plinth)
    want = brute_force_decompositions(s3s3)
    assert got == want and len(got) == 2


# --- lattice laws on validated systems ---------------------------------------------------


def subset_intersection(system, subset):
    inter = system.ambient
    for i in subset:
        inter = intersect(inter, system.subgroups[i])
    return inter


@pytest.mark.parametrize("case", ["klein", "a6"])
def test_index_multiplicativity_and_meet_law(case, klein, a6_36):
    g = klein if case == "klein" else a6_36
    e = enumerate_cartesian_decompositions(g, plinth=g)[0]
    system = to_system(g, e, 0)
    m_order = g.order()
    indices = list(range(system.index))
    for r in range(len(indices) + 1):
        for subset in combinations(indices, r):
            k_i = subset_intersection(system, subset)
            prod = 1
            for i in subset:
                prod *= m_order // system.subgroups[i].order()
            assert m_order // k_i.order() == prod
    # meet law by order count and explicit sets
    for si in [(0,), (1,)]:
        for sj in [(0,), (1,)]:
            k_i = subset_intersection(system, si)
            k_j = subset_intersection(system, sj)
            k_union = subset_intersection(system, tuple(sorted(set(si) | set(sj))))
            k_meet = subset_intersection(system, tuple(sorted(set(si) & set(sj))))
            assert k_i.order() * k_j.order() // k_union.order() == k_meet.order()
            if m_order <= 10**4:
                assert product_set(k_i.elements(), k_j.elements()) == k_meet.element_set()


def test_equivariance_of_bijection(a6_36):
    # conjugating a block stabiliser matches acting on its partition
    e = enumerate_cartesian_decompositions(a6_36, plinth=a6_36)[0]
    system = to_system(a6_36, e, 0)
    stab = a6_36.point_stabiliser(0)
    pairs = list(zip(e.partitions, system.subgroups))
    for x in stab.generators:
        for part, sub in pairs:
            img_part = part.apply(x)
            img_sub = PermGroup([g.conjugate_by(x) for g in sub.generators], degree=sub.degree)
            matches = [
                p2 == img_part and s2.same_group(img_sub) for p2, s2 in pairs
            ]
            assert any(matches)
