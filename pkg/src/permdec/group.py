"""Permutation groups with a deterministic base-and-strong-generating-set.

The stabiliser chain is built by the classic deterministic Schreier-Sims
procedure. Base points are chosen as the first point moved by the
generator that forces a new level, processing generators in input order,
so the whole construction is reproducible for a fixed generator list.
"""

from __future__ import annotations

from .errors import DegreeMismatch, NotTransitive, PointOutOfRange
from .perm import Permutation


class _Level:
    __slots__ = ("point", "gens", "orbit", "transversal", "inv")

    def __init__(self, point):
        self.point = point
        self.gens = []
        self.orbit = [point]
        self.transversal = {}
        self.inv = {}

    def recompute_orbit(self, degree):
        ident = Permutation.identity(degree)
        self.orbit = [self.point]
        self.transversal = {self.point: ident}
        self.inv = {self.point: ident}
        i = 0
        while i < len(self.orbit):
            beta = self.orbit[i]
            u = self.transversal[beta]
            for s in self.gens:
                gamma = s.images[beta]
                if gamma not in self.transversal:
                    v = u * s
                    self.orbit.append(gamma)
                    self.transversal[gamma] = v
                    self.inv[gamma] = v.inverse()
            i += 1


class _Chain:
    """Stabiliser chain: level i generates the stabiliser of base[0..i-1]."""

    def __init__(self, degree, generators, base_hint=()):
        self.degree = degree
        self.levels = []
        self._hint = list(base_hint)
        for g in generators:
            if not g.is_identity():
                self._add_gen(g, 0)
        self._complete_level(0)

    @property
    def base(self):
        return tuple(level.point for level in self.levels)

    def _new_level_point(self, g):
        while self._hint:
            point = self._hint.pop(0)
            if all(point != level.point for level in self.levels):
                return point
        return g.first_moved()

    def _add_gen(self, g, start):
        k = start
        while True:
            if k == len(self.levels):
                self.levels.append(_Level(self._new_level_point(g)))
            self.levels[k].gens.append(g)
            if g.images[self.levels[k].point] != self.levels[k].point:
                break
            k += 1

    def strip(self, g, start=0):
        """Sift g through levels[start:]; returns (residue, drop level)."""
        for i in range(start, len(self.levels)):
            level = self.levels[i]
            beta = g.images[level.point]
            u_inv = level.inv.get(beta)
            if u_inv is None:
                return g, i
            g = g * u_inv
        return g, len(self.levels)

    def _complete_level(self, i):
        if i >= len(self.levels):
            return
        self._complete_level(i + 1)
        level = self.levels[i]
        level.recompute_orbit(self.degree)
        clean = False
        while not clean:
            clean = True
            for beta in level.orbit:
                u = level.transversal[beta]
                for s in level.gens:
                    gamma = s.images[beta]
                    sg = u * s * self.levels[i].inv[gamma]
                    if sg.is_identity():
                        continue
                    residue, _ = self.strip(sg, i + 1)
                    if not residue.is_identity():
                        self._add_gen(residue, i + 1)
                        self._complete_level(i + 1)
                        clean = False

    def order(self):
        out = 1
        for level in self.levels:
            out *= len(level.orbit)
        return out

    def contains(self, g):
        if g.degree != self.degree:
            raise DegreeMismatch(f"degrees {g.degree} and {self.degree} differ")
        residue, _ = self.strip(g)
        return residue.is_identity()

    def elements(self):
        """All group elements, deterministic order; one product per element."""
        out = [Permutation.identity(self.degree)]
        for level in reversed(self.levels):
            transversal = [level.transversal[beta] for beta in level.orbit]
            out = [e * u for e in out for u in transversal]
        return out

    def random_element(self, rng):
        g = Permutation.identity(self.degree)
        for level in reversed(self.levels):
            g = g * level.transversal[rng.choice(level.orbit)]
        return g


class PermGroup:
    """A finite permutation group given by generators on {0,...,n-1}."""

    def __init__(self, generators, degree=None, name=None):
        generators = tuple(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree required for an empty generator list")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(f"generator degree {g.degree} != {degree}")
        self.degree = degree
        self.generators = generators
        self.name = name
        self._chain = None

    # chain plumbing ---------------------------------------------------------

    @property
    def chain(self):
        if self._chain is None:
            self._chain = _Chain(self.degree, self.generators)
        return self._chain

    def chain_with_base(self, base_hint):
        """A fresh stabiliser chain whose base starts with the given points."""
        return _Chain(self.degree, self.generators, base_hint=base_hint)

    @property
    def base(self):
        return self.chain.base

    @property
    def identity(self):
        return Permutation.identity(self.degree)

    # queries ----------------------------------------------------------------

    def order(self):
        return self.chain.order()

    def contains(self, g):
        return self.chain.contains(g)

    def is_trivial(self):
        return self.order() == 1

    def is_transitive(self):
        return self.degree > 0 and len(self.orbit(0)) == self.degree

    def elements(self):
        return self.chain.elements()

    def element_set(self):
        return frozenset(self.chain.elements())

    def random_element(self, rng):
        return self.chain.random_element(rng)

    def orbit(self, point):
        """The orbit of a point, ascending."""
        return tuple(sorted(self.orbit_transversal(point)))

    def orbit_transversal(self, point):
        """Map beta -> u with point^u = beta, BFS order over the generators."""
        if not 0 <= point < self.degree:
            raise PointOutOfRange(f"point {point} outside 0..{self.degree - 1}")
        trans = {point: self.identity}
        queue = [point]
        i = 0
        while i < len(queue):
            beta = queue[i]
            u = trans[beta]
            for s in self.generators:
                gamma = s.images[beta]
                if gamma not in trans:
                    trans[gamma] = u * s
                    queue.append(gamma)
            i += 1
        return trans

    def point_stabiliser(self, point):
        """Stabiliser of a point, via Schreier generators of the orbit."""
        trans = self.orbit_transversal(point)
        inv = {beta: u.inverse() for beta, u in trans.items()}
        gens = []
        for beta, u in trans.items():
            for s in self.generators:
                sg = u * s * inv[s.images[beta]]
                if not sg.is_identity():
                    gens.append(sg)
        stab = group_from_generators(gens, self.degree)
        assert self.order() == len(trans) * stab.order()
        return stab

    # comparisons --------------------------------------------------------------

    def is_subgroup_of(self, other):
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")
        return all(other.contains(g) for g in self.generators)

    def same_group(self, other):
        """Equality as subgroups of Sym(n): equal order plus mutual membership."""
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
            and other.is_subgroup_of(self)
        )

    def require_transitive(self):
        if not self.is_transitive():
            raise NotTransitive(f"{self!r} is not transitive")

    def __repr__(self):
        label = self.name or f"{len(self.generators)} gens"
        return f"PermGroup(degree={self.degree}, {label})"


def schreier_sims(generators, degree=None, name=None):
    """Build a PermGroup and force its base-and-strong-generating-set."""
    group = PermGroup(generators, degree=degree, name=name)
    group.chain  # construction is eager here; callers may share the result
    return group


def group_from_generators(gens, degree, name=None):
    """Group from a redundant generator list, keeping only essential ones."""
    selected = []
    group = PermGroup((), degree=degree, name=name)
    for g in gens:
        if g.is_identity():
            continue
        if group.contains(g):
            continue
        selected.append(g)
        group = PermGroup(tuple(selected), degree=degree, name=name)
    return group


def trivial_group(degree):
    return PermGroup((), degree=degree)
