import itertools

import pytest

from permdec import (
    BudgetExceeded,
    NotHomogeneous,
    Partition,
    Permutation,
    PermGroup,
    PointOutOfRange,
    WreathSpec,
    decode,
    encode,
    full_stabiliser,
    is_invariant,
    product_action_wreath,
)
from permdec.cartesian import CartesianDecomposition
from permdec.wreath import natural_decomposition


def test_spec_validation():
    with pytest.raises(ValueError):
        WreathSpec(1, 2)
    with pytest.raises(ValueError):
        WreathSpec(3, 1)


@pytest.mark.parametrize(
    "base,ell,order",
    [(3, 2, 72), (2, 2, 8), (2, 3, 48), (4, 2, 1152), (6, 2, 1036800)],
)
def test_orders(base, ell, order):
    w, _ = product_action_wreath(WreathSpec(base, ell))
    assert w.degree == base**ell
    assert w.order() == order
    assert w.is_transitive()


def test_encode_decode_examples():
    spec = WreathSpec(3, 2)
    assert encode(spec, (0, 0)) == 0
    assert encode(spec, (1, 2)) == 5
    assert encode(spec, (2, 0)) == 6
    assert decode(spec, 5) == (1, 2)
    for p in range(9):
        assert encode(spec, decode(spec, p)) == p


def test_encode_checks_range():
    spec = WreathSpec(3, 2)
    with pytest.raises(PointOutOfRange):
        encode(spec, (3, 0))
    with pytest.raises(PointOutOfRange):
        decode(spec, 9)
    with pytest.raises(PointOutOfRange):
        encode(spec, (0, 0, 0))


def test_degree_budget():
    with pytest.raises(BudgetExceeded):
        product_action_wreath(WreathSpec(10, 6))


def test_decode_matches_natural_blocks():
    spec = WreathSpec(3, 2)
    _, e = product_action_wreath(spec)
    for p in range(9):
        coords = decode(spec, p)
        for i, part in enumerate(e.partitions):
            block = part.block_containing(p)
            assert all(decode(spec, q)[i] == coords[i] for q in block)


def test_base_group_fixes_partitions():
    w, e = product_action_wreath(WreathSpec(3, 2))
    report = is_invariant(w, e)
    assert report.invariant
    # the subgroup fixing both partitions is the base group of order 36
    fixers = [x for x in w.elements() if all(p.apply(x) == p for p in e.partitions)]
    assert len(fixers) == 36


def test_full_stabiliser_2x2_matches_brute():
    grid = CartesianDecomposition([Partition([(0, 1), (2, 3)]), Partition([(0, 2), (1, 3)])])
    result = full_stabiliser(grid)
    brute = [
        Permutation(images)
        for images in itertools.permutations(range(4))
        if all(
            Partition([[images[x] for x in b] for b in p.blocks]) in grid.partitions
            for p in grid.partitions
        )
    ]
    assert result.group.order() == len(brute) == 8
    assert all(result.group.contains(p) for p in brute)


def test_full_stabiliser_3x3_order():
    e = natural_decomposition((3, 3))
    result = full_stabiliser(e)
    assert result.group.order() == 72
    assert result.structure == "S3 wr S2"


def test_full_stabiliser_inhomogeneous():
    e = natural_decomposition((2, 3))
    with pytest.raises(NotHomogeneous):
        full_stabiliser(e)
    result = full_stabiliser(e, require_homogeneous=False)
    assert not result.homogeneous
    assert result.group.order() == 12
    assert result.structure == "S2 x S3"


def test_full_stabiliser_mixed_classes():
    e = natural_decomposition((2, 2, 3))
    result = full_stabiliser(e, require_homogeneous=False)
    assert result.group.order() == 2 * 2 * 2 * 6
    assert "wr" in result.structure and "S3" in result.structure


def test_containment_bridge(klein):
    # G <= full_stabiliser(E) iff E is G-invariant
    grid = CartesianDecomposition([Partition([(0, 1), (2, 3)]), Partition([(0, 2), (1, 3)])])
    stab = full_stabiliser(grid).group
    assert klein.is_subgroup_of(stab)
    assert is_invariant(klein, grid).invariant
    s4 = PermGroup([Permutation([1, 2, 3, 0]), Permutation([1, 0, 2, 3])])
    assert not s4.is_subgroup_of(stab)
    assert not is_invariant(s4, grid).invariant


def test_full_stabiliser_conjugated_grid():
    # same grid with relabelled points: stabiliser order is unchanged
    e = CartesianDecomposition([Partition([(0, 3), (1, 2)]), Partition([(0, 1), (2, 3)])])
    result = full_stabiliser(e)
    assert result.group.order() == 8
    assert is_invariant(result.group, e).invariant
