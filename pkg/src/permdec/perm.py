"""Permutations on {0,...,n-1} and partitions of that point set.

Composition is left-to-right: ``(p * q)(x) == q(p(x))``, matching the
exponent convention ``x^(pq) = (x^p)^q`` used throughout the package.
"""

from __future__ import annotations

from math import gcd

from .errors import DegreeMismatch, NonBijection, PointOutOfRange


class Permutation:
    """An immutable permutation stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        seen = [False] * n
        for v in images:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise NonBijection(f"not a permutation of 0..{n - 1}: {images!r}")
            seen[v] = True
        object.__setattr__(self, "images", images)

    # construction helpers -------------------------------------------------

    @staticmethod
    def identity(n):
        p = Permutation.__new__(Permutation)
        object.__setattr__(p, "images", tuple(range(n)))
        return p

    @staticmethod
    def _unchecked(images):
        p = Permutation.__new__(Permutation)
        object.__setattr__(p, "images", tuple(images))
        return p

    @staticmethod
    def from_cycles(n, cycles):
        """Build a degree-n permutation from disjoint (or sequential) cycles."""
        images = list(range(n))
        for cycle in cycles:
            for v in cycle:
                if not 0 <= v < n:
                    raise PointOutOfRange(f"point {v} outside 0..{n - 1}")
            for i, v in enumerate(cycle):
                images[v] = cycle[(i + 1) % len(cycle)]
        return Permutation(images)

    # basic queries ---------------------------------------------------------

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        if not 0 <= point < len(self.images):
            raise PointOutOfRange(f"point {point} outside 0..{len(self.images) - 1}")
        return self.images[point]

    def is_identity(self):
        return all(i == v for i, v in enumerate(self.images))

    def first_moved(self):
        """Smallest moved point, or None for the identity."""
        for i, v in enumerate(self.images):
            if i != v:
                return i
        return None

    def support(self):
        return tuple(i for i, v in enumerate(self.images) if i != v)

    def order(self):
        out = 1
        for cycle in self.cycles():
            out = out * len(cycle) // gcd(out, len(cycle))
        return out

    def cycles(self):
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.images[x]
            out.append(tuple(cycle))
        return out

    # arithmetic ------------------------------------------------------------

    def __mul__(self, other):
        a, b = self.images, other.images
        if len(a) != len(b):
            raise DegreeMismatch(f"degrees {len(a)} and {len(b)} differ")
        return Permutation._unchecked(b[v] for v in a)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(len(self.images))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation._unchecked(inv)

    def conjugate_by(self, m):
        """m^-1 * self * m; maps a stabiliser of X to a stabiliser of X^m."""
        return m.inverse() * self * m

    def act_on_set(self, points):
        return frozenset(self.images[x] for x in points)

    # dunder plumbing ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cycles = self.cycles()
        if not cycles:
            return f"Permutation(identity, degree={self.degree})"
        text = "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
        return f"Permutation[{text}]"


class Partition:
    """A partition of {0,...,n-1} in canonical form.

    Canonical form: points ascending within blocks, blocks ascending by
    their minimum element.
    """

    __slots__ = ("blocks", "degree")

    def __init__(self, blocks, degree=None):
        norm = sorted((tuple(sorted(set(b))) for b in blocks), key=lambda b: b[0] if b else -1)
        pts = [x for b in norm for x in b]
        n = degree if degree is not None else (max(pts) + 1 if pts else 0)
        if sorted(pts) != list(range(n)):
            raise ValueError(f"blocks do not partition 0..{n - 1}: {blocks!r}")
        object.__setattr__(self, "blocks", tuple(norm))
        object.__setattr__(self, "degree", n)

    @staticmethod
    def discrete(n):
        return Partition([(i,) for i in range(n)], degree=n)

    @staticmethod
    def single(n):
        return Partition([range(n)], degree=n)

    @property
    def block_count(self):
        return len(self.blocks)

    def block_sizes(self):
        return tuple(len(b) for b in self.blocks)

    def is_uniform(self):
        return len(set(self.block_sizes())) <= 1

    def is_trivial(self):
        """True for the one-block partition and the all-singletons partition."""
        return self.block_count == 1 or self.block_count == self.degree

    def block_index_of(self):
        """Map point -> index of its block (canonical order)."""
        out = [0] * self.degree
        for i, b in enumerate(self.blocks):
            for x in b:
                out[x] = i
        return out

    def block_containing(self, point):
        if not 0 <= point < self.degree:
            raise PointOutOfRange(f"point {point} outside 0..{self.degree - 1}")
        for b in self.blocks:
            if point in b:
                return b
        raise AssertionError("unreachable")

    def apply(self, perm):
        if perm.degree != self.degree:
            raise DegreeMismatch(f"degrees {perm.degree} and {self.degree} differ")
        return Partition([[perm.images[x] for x in b] for b in self.blocks], degree=self.degree)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __lt__(self, other):
        return self.blocks < other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"Partition({[list(b) for b in self.blocks]})"

    def to_json(self):
        return [list(b) for b in self.blocks]
