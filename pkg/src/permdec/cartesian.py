"""Cartesian decompositions and Cartesian systems, and the maps between them.

A Cartesian decomposition of the point set is a list of partitions such
that every choice of one block per partition meets in exactly one point.
A Cartesian system for a transitive group M with base point w is a list
of subgroups K_1..K_l with intersection M_w such that each K_i times the
intersection of the others is all of M. For a transitive normal subgroup
that fixes every partition, the two notions correspond via K_i = the
stabiliser of the block containing w.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import (
    BudgetExceeded,
    DegreeMismatch,
    InvalidDecomposition,
    InvalidSystem,
    NotInnatelyTransitive,
    NotInvariant,
    NotSubgroup,
)
from .group import PermGroup
from .perm import Partition, Permutation
from .structure import (
    intersect,
    interval_subgroups,
    is_innately_transitive,
    partition_from_block,
    setwise_stabiliser,
)

VALIDATION_CAP = 10**7


class CartesianDecomposition:
    """An ordered list of partitions of a common point set (canonical order)."""

    __slots__ = ("partitions", "degree")

    def __init__(self, partitions):
        partitions = sorted(partitions)
        if not partitions:
            raise InvalidDecomposition("no partitions given")
        degree = partitions[0].degree
        for p in partitions:
            if p.degree != degree:
                raise DegreeMismatch(f"partition degrees {p.degree} and {degree} differ")
        object.__setattr__(self, "partitions", tuple(partitions))
        object.__setattr__(self, "degree", degree)

    @property
    def index(self):
        return len(self.partitions)

    def is_homogeneous(self):
        counts = {p.block_count for p in self.partitions}
        sizes = {s for p in self.partitions for s in p.block_sizes()}
        return len(counts) == 1 and len(sizes) == 1 and min(sizes) >= 2

    def is_nontrivial(self):
        return self.index >= 2

    def __eq__(self, other):
        return (
            isinstance(other, CartesianDecomposition) and self.partitions == other.partitions
        )

    def __hash__(self):
        return hash(self.partitions)

    def __lt__(self, other):
        return (self.index, self.partitions) < (other.index, other.partitions)

    def __repr__(self):
        return f"CartesianDecomposition(index={self.index}, degree={self.degree})"

    def to_json(self):
        return [p.to_json() for p in self.partitions]

    @staticmethod
    def from_json(data):
        return CartesianDecomposition([Partition(blocks) for blocks in data])


@dataclass(frozen=True)
class DecompositionReport:
    valid: bool
    index: int
    homogeneous: bool
    block_counts: tuple
    block_sizes: tuple
    witness: tuple | None = None

    def to_json(self):
        return {
            "valid": self.valid,
            "index": self.index,
            "homogeneous": self.homogeneous,
            "block_counts": list(self.block_counts),
            "block_sizes": [list(b) for b in self.block_sizes],
            "witness": None if self.witness is None else [list(b) for b in self.witness],
        }


def validate_decomposition(e, cap=VALIDATION_CAP):
    """Check the one-point-per-block-choice condition.

    Decided by injectivity of the point -> block-index-tuple map together
    with the product count, which is equivalent to inspecting all block
    choices. A concrete offending block choice is reported as witness.
    """
    total = 1
    for p in e.partitions:
        total *= p.block_count
    if total > cap:
        raise BudgetExceeded(f"{total} block choices exceed the cap {cap}")

    indexers = [p.block_index_of() for p in e.partitions]
    seen = {}
    witness = None
    for point in range(e.degree):
        key = tuple(ix[point] for ix in indexers)
        if key in seen:
            witness = tuple(e.partitions[i].blocks[k] for i, k in enumerate(key))
            break
        seen[key] = point
    if witness is None and total != e.degree:
        # some block choice is empty; find the first unused index tuple
        for key in product(*[range(p.block_count) for p in e.partitions]):
            if key not in seen:
                witness = tuple(e.partitions[i].blocks[k] for i, k in enumerate(key))
                break
    valid = witness is None and total == e.degree
    return DecompositionReport(
        valid=valid,
        index=e.index,
        homogeneous=e.is_homogeneous(),
        block_counts=tuple(p.block_count for p in e.partitions),
        block_sizes=tuple(p.block_sizes() for p in e.partitions),
        witness=witness,
    )


@dataclass(frozen=True)
class InvarianceReport:
    invariant: bool
    generator_actions: tuple  # per generator: tuple mapping partition i -> j
    witness: Partition | None = None

    def to_json(self):
        return {
            "invariant": self.invariant,
            "generator_actions": [list(a) for a in self.generator_actions],
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def is_invariant(g, e):
    """Whether g permutes the partitions of e, with the induced action."""
    if g.degree != e.degree:
        raise DegreeMismatch(f"degrees {g.degree} and {e.degree} differ")
    lookup = {p: i for i, p in enumerate(e.partitions)}
    actions = []
    for x in g.generators:
        row = []
        for p in e.partitions:
            img = p.apply(x)
            j = lookup.get(img)
            if j is None:
                return InvarianceReport(False, tuple(), witness=img)
            row.append(j)
        actions.append(tuple(row))
    return InvarianceReport(True, tuple(actions))


class CartesianSystem:
    """Subgroups K_1..K_l of a transitive group M, anchored at a base point."""

    __slots__ = ("ambient", "base_point", "subgroups")

    def __init__(self, ambient, base_point, subgroups):
        subgroups = tuple(subgroups)
        if not 0 <= base_point < ambient.degree:
            raise DegreeMismatch(f"base point {base_point} outside the point set")
        for k in subgroups:
            if k.degree != ambient.degree:
                raise DegreeMismatch(f"degrees {k.degree} and {ambient.degree} differ")
            if not k.is_subgroup_of(ambient):
                raise NotSubgroup("system member is not a subgroup of the ambient group")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "base_point", base_point)
        object.__setattr__(self, "subgroups", subgroups)

    @property
    def index(self):
        return len(self.subgroups)

    def is_homogeneous(self):
        m_order = self.ambient.order()
        orders = {k.order() for k in self.subgroups}
        return len(orders) == 1 and m_order not in orders

    def subgroup_intersection(self, skip=None):
        inter = None
        for i, k in enumerate(self.subgroups):
            if i == skip:
                continue
            inter = k if inter is None else intersect(inter, k)
        return inter

    def conjugate(self, m):
        return CartesianSystem(
            self.ambient,
            m.images[self.base_point],
            [PermGroup([g.conjugate_by(m) for g in k.generators], degree=k.degree)
             for k in self.subgroups],
        )

    def same_system(self, other):
        """Equality as sets of subgroups over the same ambient and base point."""
        if (
            self.ambient.degree != other.ambient.degree
            or self.base_point != other.base_point
            or self.index != other.index
            or not self.ambient.same_group(other.ambient)
        ):
            return False
        unmatched = list(other.subgroups)
        for k in self.subgroups:
            for i, k2 in enumerate(unmatched):
                if k.same_group(k2):
                    del unmatched[i]
                    break
            else:
                return False
        return True

    def to_json(self):
        return {
            "group": {
                "degree": self.ambient.degree,
                "generators": [list(g.images) for g in self.ambient.generators],
                "name": self.ambient.name,
            },
            "base_point": self.base_point,
            "subgroups": [[list(g.images) for g in k.generators] for k in self.subgroups],
        }

    def __repr__(self):
        return (
            f"CartesianSystem(index={self.index}, base_point={self.base_point},"
            f" orders={[k.order() for k in self.subgroups]})"
        )


@dataclass(frozen=True)
class SystemReport:
    valid: bool
    eq1: bool
    eq2: tuple  # per-subgroup booleans
    homogeneous: bool
    omega_prediction: int
    orders: tuple
    failing_index: int | None = None

    def to_json(self):
        return {
            "valid": self.valid,
            "eq1": self.eq1,
            "eq2": list(self.eq2),
            "homogeneous": self.homogeneous,
            "omega_prediction": self.omega_prediction,
            "orders": list(self.orders),
            "failing_index": self.failing_index,
        }


def validate_system(k):
    """Check the defining equations of a Cartesian system by order identities."""
    m = k.ambient
    m_order = m.order()
    stab = m.point_stabiliser(k.base_point)

    inter_all = k.subgroup_intersection()
    eq1 = inter_all.same_group(stab)

    # |K_i (inter of others)| = |K_i| |inter of others| / |inter of all|,
    # so the set condition K_i (inter of others) = M is exactly this identity
    eq2 = []
    failing = None
    for i in range(k.index):
        others = k.subgroup_intersection(skip=i)
        ok = k.subgroups[i].order() * others.order() == m_order * inter_all.order()
        eq2.append(ok)
        if not ok and failing is None:
            failing = i

    prediction = 1
    for sub in k.subgroups:
        prediction *= m_order // sub.order()
    return SystemReport(
        valid=eq1 and all(eq2),
        eq1=eq1,
        eq2=tuple(eq2),
        homogeneous=k.is_homogeneous(),
        omega_prediction=prediction,
        orders=tuple(sub.order() for sub in k.subgroups),
        failing_index=failing,
    )


def plinth_fixes_partitions(m, e):
    """Whether every generator of m fixes every partition of e setwise."""
    if m.degree != e.degree:
        raise DegreeMismatch(f"degrees {m.degree} and {e.degree} differ")
    return all(p.apply(x) == p for p in e.partitions for x in m.generators)


def to_system(m, e, omega=0):
    """The Cartesian system of block stabilisers at omega."""
    m.require_transitive()
    report = validate_decomposition(e)
    if not report.valid:
        raise InvalidDecomposition(f"invalid decomposition: witness {report.witness}")
    for p in e.partitions:
        for x in m.generators:
            if p.apply(x) != p:
                raise NotInvariant(f"partition {p!r} is moved by a group generator")
    subgroups = []
    for p in e.partitions:
        gamma = p.block_containing(omega)
        subgroups.append(setwise_stabiliser(m, gamma))
    system = CartesianSystem(m, omega, subgroups)
    sys_report = validate_system(system)
    if not sys_report.valid:
        raise InvalidSystem(f"block stabilisers fail the system equations: {sys_report}")
    return system


def covariance_check(m, e, omega, mover):
    """Whether the system at omega^mover is the mover-conjugate of the one at omega."""
    if not m.contains(mover):
        raise NotSubgroup("the moving element lies outside the group")
    lhs = to_system(m, e, omega).conjugate(mover)
    rhs = to_system(m, e, mover.images[omega])
    return lhs.same_system(rhs)


def to_decomposition(k):
    """The decomposition whose partitions are the translates of the orbits w^K_i."""
    report = validate_system(k)
    if not report.valid:
        raise InvalidSystem(f"system equations fail: {report}")
    m = k.ambient
    m.require_transitive()
    partitions = []
    for sub in k.subgroups:
        block = frozenset(sub.orbit(k.base_point))
        partitions.append(partition_from_block(m, block))
    e = CartesianDecomposition(partitions)
    if not validate_decomposition(e).valid:
        raise InvalidSystem("translated orbits do not form a Cartesian decomposition")
    if not to_system(m, e, k.base_point).same_system(k):
        raise InvalidSystem("round trip through block stabilisers does not recover the system")
    return e


# --- enumeration -------------------------------------------------------------


def _resolve_plinth(g, plinth, bound):
    if plinth is None:
        report = is_innately_transitive(g, bound=bound)
        if not report.innately_transitive:
            raise NotInnatelyTransitive(
                "no transitive minimal normal subgroup; supply plinth= explicitly"
            )
        return report.plinths[0]
    if not plinth.is_transitive():
        raise NotInnatelyTransitive("supplied plinth is not transitive")
    if not plinth.is_subgroup_of(g):
        raise NotSubgroup("supplied plinth is not a subgroup")
    for x in g.generators:
        for y in plinth.generators:
            if not plinth.contains(y.conjugate_by(x)):
                raise NotInnatelyTransitive("supplied plinth is not normal")
    return plinth


def enumerate_cartesian_systems(g, omega=0, plinth=None, bound=10**6, max_index=None):
    """All G_omega-invariant Cartesian systems of the plinth, as block subsets.

    Works entirely in the lattice of blocks through omega: a subgroup
    between M_omega and M corresponds to the block that is its
    omega-orbit, intersections of subgroups correspond to intersections
    of blocks, and the system equations become counting conditions on
    blocks. Returns (plinth, list of block tuples).
    """
    g.require_transitive()
    m = _resolve_plinth(g, plinth, bound)
    n = g.degree

    blocks = [b for b, _ in interval_subgroups(m, omega)]
    proper = sorted((b for b in blocks if 1 < len(b) < n), key=lambda b: (len(b), sorted(b)))
    block_set = set(blocks)

    stab_gens = g.point_stabiliser(omega).generators

    results = []

    def eqs_hold(chosen):
        inter_all = frozenset.intersection(*chosen)
        if inter_all != frozenset({omega}):
            return False
        for i in range(len(chosen)):
            rest = [b for j, b in enumerate(chosen) if j != i]
            other = frozenset.intersection(*rest)
            # intersections of blocks through omega are again blocks
            assert other in block_set
            if len(chosen[i]) * len(other) != n:
                return False
        return True

    def gomega_invariant(chosen):
        chosen_set = set(chosen)
        return all(
            frozenset(x.images[p] for p in b) in chosen_set
            for b in chosen
            for x in stab_gens
        )

    def dfs(start, chosen, prod):
        if len(chosen) >= 2 and prod == n and eqs_hold(chosen) and gomega_invariant(chosen):
            results.append(tuple(chosen))
        if prod >= n:
            return
        if max_index is not None and len(chosen) >= max_index:
            return
        for i in range(start, len(proper)):
            b = proper[i]
            count = n // len(b)
            if prod * count <= n:
                dfs(i + 1, chosen + [b], prod * count)

    dfs(0, [], 1)
    return m, results


def enumerate_cartesian_decompositions(g, omega=0, plinth=None, bound=10**6, max_index=None):
    """The complete list of g-invariant Cartesian decompositions, canonical order."""
    m, block_tuples = enumerate_cartesian_systems(
        g, omega=omega, plinth=plinth, bound=bound, max_index=max_index
    )
    out = []
    for chosen in block_tuples:
        e = CartesianDecomposition([partition_from_block(m, b) for b in chosen])
        assert validate_decomposition(e).valid
        assert is_invariant(g, e).invariant
        assert plinth_fixes_partitions(m, e)
        out.append(e)
    return sorted(set(out))


@dataclass(frozen=True)
class RoundTripReport:
    decomposition_count: int
    forward_ok: bool
    backward_ok: bool
    details: tuple = field(default_factory=tuple)

    @property
    def ok(self):
        return self.forward_ok and self.backward_ok

    def to_json(self):
        return {
            "decomposition_count": self.decomposition_count,
            "forward_ok": self.forward_ok,
            "backward_ok": self.backward_ok,
            "details": list(self.details),
        }


def round_trip_check(g, omega=0, plinth=None, bound=10**6):
    """Both directions of the decomposition/system bijection on g."""
    m, block_tuples = enumerate_cartesian_systems(g, omega=omega, plinth=plinth, bound=bound)
    decomps = enumerate_cartesian_decompositions(g, omega=omega, plinth=plinth, bound=bound)

    forward_ok = True
    details = []
    for e in decomps:
        k = to_system(m, e, omega)
        back = to_decomposition(k)
        good = back == e
        forward_ok = forward_ok and good
        details.append(f"decomposition index {e.index}: round trip {'ok' if good else 'FAIL'}")

    backward_ok = True
    systems = [
        CartesianSystem(m, omega, [setwise_stabiliser(m, b) for b in chosen])
        for chosen in block_tuples
    ]
    for k in systems:
        e = to_decomposition(k)
        again = to_system(m, e, omega)
        good = again.same_system(k)
        backward_ok = backward_ok and good
        details.append(f"system index {k.index}: round trip {'ok' if good else 'FAIL'}")

    if len(systems) != len(decomps):
        backward_ok = False
        details.append(f"count mismatch: {len(systems)} systems vs {len(decomps)} decompositions")

    return RoundTripReport(len(decomps), forward_ok, backward_ok, tuple(details))
