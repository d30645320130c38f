"""Factorisation predicates: plain, full, and strong multiple factorisations.

All predicates decide by order arithmetic (|A||B| = |G||A intersect B|)
and fall back to explicit set enumeration only under a desk-scale bound.
Automorphisms are never computed from scratch; equivalence checking
takes caller-supplied maps and searches inner adjustments explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, NotFactorisation, NotSubgroup
from .group import PermGroup
from .structure import intersect, normaliser_in

ENUMERATION_BOUND = 10**4
NORMALISER_BUDGET = 2 * 10**5


def prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


@dataclass(frozen=True)
class FactorisationReport:
    holds: bool
    orders: tuple  # (|A|, |B|, |A intersect B|, |G|)
    prime_sets: tuple  # primes of |G|, |A|, |B|
    full: bool
    witness: str | None = None

    def to_json(self):
        return {
            "holds": self.holds,
            "orders": list(self.orders),
            "prime_sets": [list(p) for p in self.prime_sets],
            "full": self.full,
            "witness": self.witness,
        }


def _require_subgroup(g, h, label):
    if not h.is_subgroup_of(g):
        raise NotSubgroup(f"{label} is not a subgroup of the ambient group")


def is_factorisation(g, a, b, enumeration_bound=ENUMERATION_BOUND):
    """Whether G = AB, by the order identity |A||B| = |G||A intersect B|."""
    _require_subgroup(g, a, "A")
    _require_subgroup(g, b, "B")
    inter = intersect(a, b)
    orders = (a.order(), b.order(), inter.order(), g.order())
    holds = orders[0] * orders[1] == orders[3] * orders[2]
    witness = None
    if g.order() <= enumeration_bound:
        product = {x * y for x in a.elements() for y in b.elements()}
        set_holds = len(product) == g.order() and all(g.contains(p) for p in product)
        assert set_holds == holds
        if not holds:
            witness = f"product set has {len(product)} of {g.order()} elements"
    elif not holds:
        witness = f"|A||B| = {orders[0] * orders[1]} != |G||A&B| = {orders[3] * orders[2]}"
    primes = (
        prime_divisors(g.order()),
        prime_divisors(a.order()),
        prime_divisors(b.order()),
    )
    full = holds and primes[0] == primes[1] == primes[2]
    return FactorisationReport(holds, orders, primes, full, witness)


def is_full_factorisation(t, a, b, enumeration_bound=ENUMERATION_BOUND):
    """A factorisation where |T|, |A|, |B| share the same prime divisors."""
    report = is_factorisation(t, a, b, enumeration_bound)
    if report.holds and not report.full:
        return FactorisationReport(
            False, report.orders, report.prime_sets, False,
            witness="prime divisor sets differ",
        )
    return FactorisationReport(
        report.holds and report.full, report.orders, report.prime_sets,
        report.full, report.witness,
    )


@dataclass(frozen=True)
class MultipleFactorisationReport:
    holds: bool
    per_index: tuple  # Eq. (2) status for each i
    proper: tuple  # properness per subgroup
    orders: tuple
    intersection_order: int
    omega_prediction: int
    trivial: bool  # some member equals the whole group

    def to_json(self):
        return {
            "holds": self.holds,
            "per_index": list(self.per_index),
            "proper": list(self.proper),
            "orders": list(self.orders),
            "intersection_order": self.intersection_order,
            "omega_prediction": self.omega_prediction,
            "trivial": self.trivial,
        }


def is_strong_multiple_factorisation(t, subgroups):
    """K_i times the intersection of the others equals T, for >= 3 subgroups."""
    subgroups = list(subgroups)
    if len(subgroups) < 3:
        raise ValueError("a strong multiple factorisation needs at least 3 subgroups")
    t_order = t.order()
    for i, k in enumerate(subgroups):
        _require_subgroup(t, k, f"K{i + 1}")
    proper = tuple(k.order() < t_order for k in subgroups)

    inter_all = subgroups[0]
    for k in subgroups[1:]:
        inter_all = intersect(inter_all, k)

    per_index = []
    for i, k in enumerate(subgroups):
        rest = None
        for j, other in enumerate(subgroups):
            if j == i:
                continue
            rest = other if rest is None else intersect(rest, other)
        per_index.append(k.order() * rest.order() == t_order * inter_all.order())

    prediction = 1
    for k in subgroups:
        prediction *= t_order // k.order()
    trivial = not all(proper)
    return MultipleFactorisationReport(
        holds=all(per_index) and all(proper),
        per_index=tuple(per_index),
        proper=proper,
        orders=tuple(k.order() for k in subgroups),
        intersection_order=inter_all.order(),
        omega_prediction=prediction,
        trivial=trivial,
    )


# --- conjugation transitivity -------------------------------------------------


def _conjugate_group(k, x):
    return PermGroup([g.conjugate_by(x) for g in k.generators], degree=k.degree)


def conjugation_transitivity_check(g, a, b, budget=NORMALISER_BUDGET):
    """Whether A acts transitively by conjugation on the G-class of B.

    Decided by the index identity |A : N_A(B)| = |G : N_G(B)|; at small
    |G| the orbit of B under A is also walked explicitly and compared.
    """
    report = is_factorisation(g, a, b)
    if not report.holds:
        raise NotFactorisation("G = AB does not hold")
    if b.is_trivial():
        return True
    if g.order() > budget:
        raise BudgetExceeded(f"group order {g.order()} above bound {budget}")
    n_g = normaliser_in(g, b, budget=budget)
    n_a = normaliser_in(a, b, budget=budget)
    class_size = g.order() // n_g.order()
    orbit_size = a.order() // n_a.order()
    answer = orbit_size == class_size
    if g.order() <= ENUMERATION_BOUND:
        explicit = _conjugation_orbit_size(a, b)
        assert explicit == orbit_size
    return answer


def _conjugation_orbit_size(a, b):
    start = frozenset(b.elements())
    seen = {start}
    queue = [start]
    i = 0
    while i < len(queue):
        current = queue[i]
        for x in a.generators:
            x_inv = x.inverse()
            img = frozenset(x_inv * e * x for e in current)
            if img not in seen:
                seen.add(img)
                queue.append(img)
        i += 1
    return len(seen)


# --- automorphisms and equivalence ---------------------------------------------


class Automorphism:
    """A group automorphism given as an explicit map on permutations."""

    def __init__(self, fn, name=None):
        self._fn = fn
        self.name = name

    @staticmethod
    def identity(name="id"):
        return Automorphism(lambda x: x, name=name)

    @staticmethod
    def from_relabelling(r, name=None):
        """Conjugation x -> r^-1 x r by a fixed relabelling permutation."""
        r_inv = r.inverse()
        return Automorphism(lambda x: r_inv * x * r, name=name)

    def apply(self, x):
        return self._fn(x)

    def apply_group(self, k):
        return PermGroup([self._fn(g) for g in k.generators], degree=k.degree, name=k.name)

    def __repr__(self):
        return f"Automorphism({self.name or 'unnamed'})"


def _find_conjugator(g, h, k, budget):
    """Some x in g with h^x = k, or None. Walks the conjugation orbit of h."""
    if h.order() != k.order():
        return None
    if g.order() > budget:
        raise BudgetExceeded(f"group order {g.order()} above bound {budget}")
    target = frozenset(k.elements())
    start = frozenset(h.elements())
    seen = {start: g.identity}
    queue = [start]
    i = 0
    while i < len(queue):
        current = queue[i]
        u = seen[current]
        if current == target:
            return u
        for x in g.generators:
            x_inv = x.inverse()
            img = frozenset(x_inv * e * x for e in current)
            if img not in seen:
                seen[img] = u * x
                queue.append(img)
        i += 1
    return seen.get(target)


def equivalent_factorisations(g, pair1, pair2, automorphisms, budget=NORMALISER_BUDGET):
    """Whether some supplied automorphism, adjusted by an inner one, maps
    the first factorisation pair onto the second as an unordered pair."""
    a1, b1 = pair1
    a2, b2 = pair2
    for a, b in (pair1, pair2):
        if not is_factorisation(g, a, b).holds:
            raise NotFactorisation("both pairs must be factorisations")

    targets = [(a2, b2), (b2, a2)]
    for beta in automorphisms:
        first = beta.apply_group(a1)
        second = beta.apply_group(b1)
        for ta, tb in targets:
            if first.order() != ta.order() or second.order() != tb.order():
                continue
            x = _find_conjugator(g, first, ta, budget)
            if x is None:
                continue
            # all conjugators form x * N_g(ta); scan that coset for one
            # aligning the second components
            moved = _conjugate_group(second, x)
            n_ta = normaliser_in(g, ta, budget=budget)
            if any(
                _conjugate_group(moved, n).same_group(tb) for n in n_ta.elements()
            ):
                return True
    return False
