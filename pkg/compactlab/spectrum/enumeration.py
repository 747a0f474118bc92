"""
Ideal and Prime Enumeration

All ideals of a finite ring are found by breadth-first saturation: start from the principal
ideals and keep adding one principal ideal at a time until no new member set appears. Every
ideal of a finite ring is a finite sum of principal ideals, so this reaches all of them.
Primality is tested by the raw definition, independently of quotient code.
"""

import logging
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np

from compactlab.config import settings
from compactlab.errors import CapacityError, ConsistencyError
from compactlab.rings.base import FiniteRing, mask_from_bools
from compactlab.rings.ideals import Ideal, ideal_sum, principal_ideal

logger = logging.getLogger(__name__)


class SiteKind(StrEnum):
    SPEC = "spec"
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class SpecSite:
    """
    A set of prime ideals of one ring: the whole spectrum, the minimal primes, or the
    maximal ideals.

    Args:
        ring: The ring the points live in
        points: Prime ideals, in canonical order
        kind: Which part of the spectrum this is
    """

    ring: FiniteRing = field(repr=False, compare=False)
    points: tuple[Ideal, ...]
    kind: SiteKind

    def __len__(self) -> int:
        return len(self.points)

    def index_of(self, ideal: Ideal) -> int:
        for i, point in enumerate(self.points):
            if point.mask == ideal.mask:
                return i
        raise ValueError(f"Ideal is not a point of this {self.kind} site")

    def reordered(self, order: list[int]) -> "SpecSite":
        return SpecSite(self.ring, tuple(self.points[i] for i in order), self.kind)


def _canonical(ideals: list[Ideal]) -> tuple[Ideal, ...]:
    return tuple(sorted(ideals, key=lambda ideal: (ideal.size, ideal.mask)))


def _check_cap(ring: FiniteRing, cap: int | None) -> None:
    limit = settings.PRODUCT_RING_CAP if cap is None else cap
    if ring.order > limit:
        raise CapacityError("ring order for ideal enumeration", limit, ring.order)


def enumerate_ideals(ring: FiniteRing, cap: int | None = None) -> tuple[Ideal, ...]:
    """
    Every ideal of ``ring`` with a generator witness.

    Args:
        ring: Ring to enumerate
        cap: Order cap (defaults to PRODUCT_RING_CAP)

    Returns:
        All ideals sorted by (size, member bit vector)
    """
    _check_cap(ring, cap)
    principal: dict[int, Ideal] = {}
    for a in range(ring.order):
        ideal = principal_ideal(ring, a)
        principal.setdefault(ideal.mask, ideal)

    seeds = _canonical(list(principal.values()))
    known: dict[int, Ideal] = dict(principal)
    frontier = list(seeds)
    rounds = 0
    while frontier:
        rounds += 1
        discovered: list[Ideal] = []
        for ideal in frontier:
            for seed in seeds:
                if seed.issubset(ideal):
                    continue
                joined = ideal_sum(ideal, seed)
                if joined.mask not in known:
                    known[joined.mask] = joined
                    discovered.append(joined)
        frontier = discovered
    logger.debug(f"Ring of order {ring.order}: {len(known)} ideals after {rounds} rounds")
    return _canonical(list(known.values()))


def is_prime(ideal: Ideal) -> bool:
    """P != R and a, b outside P imply ab outside P."""
    ring = ideal.ring
    if not ideal.is_proper:
        return False
    outside = np.flatnonzero(~ideal.flags)
    for a in outside:
        if ideal.flags[ring.mul_many(int(a), outside)].any():
            return False
    return True


def enumerate_primes(ring: FiniteRing, cap: int | None = None) -> SpecSite:
    """All prime ideals of ``ring``."""
    primes = [ideal for ideal in enumerate_ideals(ring, cap) if is_prime(ideal)]
    return SpecSite(ring, _canonical(primes), SiteKind.SPEC)


def max_ideals(ring: FiniteRing, cap: int | None = None) -> SpecSite:
    """Containment-maximal proper ideals."""
    proper = [ideal for ideal in enumerate_ideals(ring, cap) if ideal.is_proper]
    maximal = [
        ideal
        for ideal in proper
        if not any(ideal.mask != other.mask and ideal.issubset(other) for other in proper)
    ]
    for ideal in maximal:
        if not is_prime(ideal):
            raise ConsistencyError("A maximal ideal failed the primality test")
    return SpecSite(ring, _canonical(maximal), SiteKind.MAX)


def minimal_by_containment(site: SpecSite) -> set[int]:
    return {
        p.mask
        for p in site.points
        if not any(q.mask != p.mask and q.issubset(p) for q in site.points)
    }


def minimal_by_nilpotent_criterion(site: SpecSite) -> set[int]:
    """Primes p such that every f in p has some g outside p with fg nilpotent."""
    ring = site.ring
    nilpotent = ring.nilpotent_mask
    selected = set()
    for p in site.points:
        outside = np.flatnonzero(~p.flags)
        if all(nilpotent[ring.mul_many(int(f), outside)].any() for f in p.indices):
            selected.add(p.mask)
    return selected


def min_primes(ring: FiniteRing, cap: int | None = None) -> SpecSite:
    """
    Minimal primes, computed twice and compared.

    Raises:
        ConsistencyError: Containment-minimality and the nilpotent-product criterion disagree
    """
    spec = enumerate_primes(ring, cap)
    by_containment = minimal_by_containment(spec)
    by_criterion = minimal_by_nilpotent_criterion(spec)
    if by_containment != by_criterion:
        raise ConsistencyError(
            f"Minimal prime oracles disagree on a ring of order {ring.order}: "
            f"{len(by_containment)} by containment, {len(by_criterion)} by criterion"
        )
    points = [p for p in spec.points if p.mask in by_containment]
    return SpecSite(ring, tuple(points), SiteKind.MIN)


def site(ring: FiniteRing, kind: SiteKind | str, cap: int | None = None) -> SpecSite:
    match SiteKind(kind):
        case SiteKind.SPEC:
            return enumerate_primes(ring, cap)
        case SiteKind.MIN:
            return min_primes(ring, cap)
        case SiteKind.MAX:
            return max_ideals(ring, cap)


def jacobson_from_maximals(ring: FiniteRing, cap: int | None = None) -> Ideal:
    """Intersection of all maximal ideals."""
    flags = np.ones(ring.order, dtype=bool)
    for m in max_ideals(ring, cap).points:
        flags &= m.flags
    return Ideal.from_flags(ring, flags)


def nilradical_from_primes(ring: FiniteRing, cap: int | None = None) -> Ideal:
    flags = np.ones(ring.order, dtype=bool)
    for p in enumerate_primes(ring, cap).points:
        flags &= p.flags
    return Ideal(ring, mask_from_bools(flags), ())
