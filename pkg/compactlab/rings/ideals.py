"""
Ideals and Multiplicative Sets

Ideals are stored as integer bit vectors over element indices together with a list of
generators that witnesses them. Closure is computed as a fixed point: first every generator
is multiplied by the whole ring, then the additive subgroup of those multiples is formed.
Sums of ring multiples are again closed under multiplication, so one round reaches the fixed
point.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from compactlab.rings.base import (
    BoolArray,
    FiniteRing,
    IndexArray,
    bools_from_mask,
    indices_from_mask,
    mask_from_bools,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ideal:
    """
    An ideal of a finite ring.

    Equality and hashing use the member bit vector only; generators are a witness.

    Args:
        ring: The ambient ring
        mask: Bit vector of members (bit a set iff element a is in the ideal)
        generators: Elements whose closure is the ideal
    """

    ring: FiniteRing = field(compare=False, repr=False)
    mask: int
    generators: tuple[int, ...] = field(default=(), compare=False)

    @cached_property
    def flags(self) -> BoolArray:
        return bools_from_mask(self.mask, self.ring.order)

    @cached_property
    def indices(self) -> IndexArray:
        return indices_from_mask(self.mask, self.ring.order)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(int(a) for a in self.indices)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def is_proper(self) -> bool:
        return self.ring.one not in self

    def __contains__(self, a: object) -> bool:
        return isinstance(a, int | np.integer) and bool((self.mask >> int(a)) & 1)

    def issubset(self, other: "Ideal") -> bool:
        return self.mask & ~other.mask == 0

    def labels(self) -> list[object]:
        return [self.ring.element_label(a) for a in self.members]

    @classmethod
    def from_flags(cls, ring: FiniteRing, flags: BoolArray) -> "Ideal":
        """Wrap an already closed member set, choosing generators greedily."""
        mask = mask_from_bools(flags)
        return cls(ring, mask, greedy_generators(ring, np.asarray(flags, dtype=bool)))


@dataclass(frozen=True)
class MultSet:
    """
    A multiplicative subset: contains one and is closed under multiplication.

    Raises:
        ValueError: The member set is not multiplicative
    """

    ring: FiniteRing = field(compare=False, repr=False)
    mask: int

    def __post_init__(self) -> None:
        flags = bools_from_mask(self.mask, self.ring.order)
        if not flags[self.ring.one]:
            raise ValueError("A multiplicative set must contain one")
        members = np.flatnonzero(flags)
        products = self.ring.mul_many(members[:, None], members[None, :])
        if not flags[products].all():
            raise ValueError("Set is not closed under multiplication")

    @cached_property
    def indices(self) -> IndexArray:
        return indices_from_mask(self.mask, self.ring.order)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(int(a) for a in self.indices)

    def __contains__(self, a: object) -> bool:
        return isinstance(a, int | np.integer) and bool((self.mask >> int(a)) & 1)

    @classmethod
    def of(cls, ring: FiniteRing, members: Iterable[int]) -> "MultSet":
        flags = np.zeros(ring.order, dtype=bool)
        flags[list(members)] = True
        return cls(ring, mask_from_bools(flags))

    @classmethod
    def generated(cls, ring: FiniteRing, generators: Iterable[int]) -> "MultSet":
        """Smallest multiplicative set containing ``generators``."""
        flags = np.zeros(ring.order, dtype=bool)
        flags[ring.one] = True
        for g in generators:
            flags[int(g)] = True
        while True:
            members = np.flatnonzero(flags)
            grown = flags.copy()
            grown[ring.mul_many(members[:, None], members[None, :])] = True
            if (grown == flags).all():
                return cls(ring, mask_from_bools(flags))
            flags = grown

    @classmethod
    def complement_of(cls, ideal: Ideal) -> "MultSet":
        """R minus a prime ideal."""
        return cls(ideal.ring, mask_from_bools(~ideal.flags))

    @classmethod
    def units(cls, ring: FiniteRing) -> "MultSet":
        return cls(ring, mask_from_bools(ring.unit_mask))


def additive_closure(
    ring: FiniteRing, seeds: BoolArray, base: BoolArray | None = None
) -> BoolArray:
    """
    Smallest additive subgroup containing ``seeds`` (and the subgroup ``base``).

    Each seed t outside the current group H is joined by adding the cosets H + kt until a
    multiple of t falls back into the group.
    """
    group = np.zeros(ring.order, dtype=bool) if base is None else base.copy()
    group[ring.zero] = True
    for t in np.flatnonzero(seeds):
        if group[t]:
            continue
        members = np.flatnonzero(group)
        step = int(t)
        while not group[step]:
            group[ring.add_many(step, members)] = True
            step = ring.add(step, int(t))
    return group


def ideal_generate(ring: FiniteRing, generators: Iterable[int]) -> Ideal:
    """
    Smallest ideal containing ``generators``.

    Args:
        ring: Ambient ring
        generators: Element indices

    Returns:
        The generated ideal, carrying ``generators`` as its witness

    Raises:
        ValueError: A generator is not an element of the ring
    """
    gens = tuple(int(g) for g in generators)
    for g in gens:
        if not 0 <= g < ring.order:
            raise ValueError(f"Generator {g} is not an element of a ring of order {ring.order}")
    multiples = np.zeros(ring.order, dtype=bool)
    multiples[ring.zero] = True
    for g in gens:
        multiples[ring.mul_row(g)] = True
    closed = additive_closure(ring, multiples)
    return Ideal(ring, mask_from_bools(closed), gens)


def principal_ideal(ring: FiniteRing, a: int) -> Ideal:
    """(a) = R*a; the row of the multiplication table is already an additive subgroup."""
    flags = np.zeros(ring.order, dtype=bool)
    flags[ring.mul_row(a)] = True
    return Ideal(ring, mask_from_bools(flags), (int(a),))


def ideal_sum(first: Ideal, second: Ideal) -> Ideal:
    ring = first.ring
    if second.issubset(first):
        return first
    if first.issubset(second):
        return second
    closed = additive_closure(ring, second.flags, base=first.flags)
    generators = first.generators + tuple(g for g in second.generators if g not in first)
    return Ideal(ring, mask_from_bools(closed), generators)


def ideal_intersection(first: Ideal, second: Ideal) -> Ideal:
    ring = first.ring
    return Ideal.from_flags(ring, first.flags & second.flags)


def is_ideal(ring: FiniteRing, flags: BoolArray) -> bool:
    """Membership test for the ideal laws on an arbitrary element subset."""
    if not flags[ring.zero]:
        return False
    members = np.flatnonzero(flags)
    sums = ring.add_many(members[:, None], members[None, :])
    if not flags[sums].all():
        return False
    multiples = ring.mul_many(members[:, None], ring.elements()[None, :])
    return bool(flags[multiples].all())


def greedy_generators(ring: FiniteRing, flags: BoolArray) -> tuple[int, ...]:
    """Generators picked in index order, skipping members already in the span so far."""
    span = np.zeros(ring.order, dtype=bool)
    span[ring.zero] = True
    generators: list[int] = []
    for a in np.flatnonzero(flags):
        if span[a]:
            continue
        generators.append(int(a))
        multiples = np.zeros(ring.order, dtype=bool)
        multiples[ring.mul_row(int(a))] = True
        span = additive_closure(ring, multiples, base=span)
    return tuple(generators)


def zero_ideal(ring: FiniteRing) -> Ideal:
    flags = np.zeros(ring.order, dtype=bool)
    flags[ring.zero] = True
    return Ideal(ring, mask_from_bools(flags), ())


def unit_ideal(ring: FiniteRing) -> Ideal:
    return Ideal(ring, mask_from_bools(np.ones(ring.order, dtype=bool)), (ring.one,))


def enumerate_mult_sets(ring: FiniteRing) -> tuple[MultSet, ...]:
    """
    Every multiplicative subset of ``ring``, by joining the monoids generated by single
    elements until nothing new appears. Every finite monoid is a join of those, and in a
    commutative ring the join of two monoids A and B is the product set AB.

    Returns:
        Multiplicative sets sorted by (size, member bit vector)
    """
    seeds: dict[int, MultSet] = {}
    for a in range(ring.order):
        monoid = MultSet.generated(ring, [a])
        seeds.setdefault(monoid.mask, monoid)
    known = dict(seeds)
    frontier = list(seeds.values())
    while frontier:
        discovered = []
        for mult_set in frontier:
            for seed in seeds.values():
                if seed.mask | mult_set.mask == mult_set.mask:
                    continue
                flags = np.zeros(ring.order, dtype=bool)
                flags[ring.mul_many(mult_set.indices[:, None], seed.indices[None, :])] = True
                mask = mask_from_bools(flags)
                if mask not in known:
                    joined = MultSet(ring, mask)
                    known[mask] = joined
                    discovered.append(joined)
        frontier = discovered
    logger.debug(f"Ring of order {ring.order}: {len(known)} multiplicative sets")
    return tuple(sorted(known.values(), key=lambda s: (len(s.members), s.mask)))
