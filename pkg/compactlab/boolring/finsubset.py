"""
Finite Power Set Ring

Subsets of a finite universe {0, ..., n-1} as bit vectors, with symmetric difference as
addition and intersection as multiplication. The power set ring is also built as a product of
n copies of Z/2 so the generic ring and spectrum code can run on it; the characteristic
function gives the identification between the two.
"""

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from compactlab.rings.atoms import LocalAtom
from compactlab.rings.product import ProductRing, product


@dataclass(frozen=True, order=True)
class FinSubset:
    """
    A subset of {0, ..., size-1}.

    Args:
        size: Universe size n
        bits: Characteristic bit vector (bit x set iff x is a member)
    """

    size: int
    bits: int

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError(f"Universe size must be non-negative, got {self.size}")
        if self.bits < 0 or self.bits >> self.size:
            raise ValueError(f"Bits {self.bits:b} fall outside a universe of size {self.size}")

    @classmethod
    def of(cls, size: int, members: Iterable[int]) -> "FinSubset":
        bits = 0
        for x in members:
            bits |= 1 << x
        return cls(size, bits)

    @classmethod
    def empty(cls, size: int) -> "FinSubset":
        return cls(size, 0)

    @classmethod
    def full(cls, size: int) -> "FinSubset":
        return cls(size, (1 << size) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.size) if (self.bits >> x) & 1)

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and 0 <= x < self.size and bool((self.bits >> x) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def _check(self, other: "FinSubset") -> None:
        if other.size != self.size:
            raise ValueError(f"Universe sizes differ: {self.size} and {other.size}")

    def __add__(self, other: "FinSubset") -> "FinSubset":
        self._check(other)
        return FinSubset(self.size, self.bits ^ other.bits)

    def __mul__(self, other: "FinSubset") -> "FinSubset":
        self._check(other)
        return FinSubset(self.size, self.bits & other.bits)

    __xor__ = __add__
    __and__ = __mul__

    def __or__(self, other: "FinSubset") -> "FinSubset":
        self._check(other)
        return FinSubset(self.size, self.bits | other.bits)

    def __invert__(self) -> "FinSubset":
        return FinSubset(self.size, ((1 << self.size) - 1) & ~self.bits)

    def issubset(self, other: "FinSubset") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __str__(self) -> str:
        return "{" + ", ".join(str(x) for x in self.members) + "}"


def all_subsets(size: int) -> list[FinSubset]:
    return [FinSubset(size, bits) for bits in range(1 << size)]


def power_set_ring(size: int) -> ProductRing:
    """
    P(X) for X = {0, ..., size-1}, realized as (Z/2)^X with labels "0", "1", ...

    Raises:
        ValueError: size < 1
    """
    if size < 1:
        raise ValueError(f"Power set rings need a non-empty universe, got size {size}")
    return product([LocalAtom(2)] * size, [str(x) for x in range(size)])


def subset_to_element(ring: ProductRing, subset: FinSubset) -> int:
    """The characteristic function of ``subset`` as an element of ``ring``."""
    if len(ring.labels) != subset.size:
        raise ValueError(f"Ring has {len(ring.labels)} labels, subset universe {subset.size}")
    return ring.encode([(subset.bits >> x) & 1 for x in range(subset.size)])


def element_to_subset(ring: ProductRing, a: int) -> FinSubset:
    components = ring.components(a)
    return FinSubset.of(len(components), (x for x, c in enumerate(components) if c))


def subset_elements(ring: ProductRing) -> np.ndarray:
    """Element index of every subset, indexed by the subset's bit vector."""
    size = len(ring.labels)
    bits = np.arange(1 << size, dtype=np.int64)
    components = (bits[:, None] >> np.arange(size)[None, :]) & 1
    return ring.encode_many(components)


def characteristic_isomorphism_holds(size: int) -> bool:
    """
    A -> chi_A is a ring isomorphism P(X) -> (Z/2)^X, checked on all pairs of subsets.
    """
    ring = power_set_ring(size)
    chi = subset_elements(ring)
    if len(set(chi.tolist())) != ring.order:
        return False
    bits = np.arange(1 << size, dtype=np.int64)
    sums = chi[bits[:, None] ^ bits[None, :]]
    products = chi[bits[:, None] & bits[None, :]]
    return bool(
        (sums == ring.add_many(chi[:, None], chi[None, :])).all()
        and (products == ring.mul_many(chi[:, None], chi[None, :])).all()
        and chi[(1 << size) - 1] == ring.one
        and chi[0] == ring.zero
    )


def union_and_downward_closed(members: Iterable[FinSubset]) -> bool:
    """
    A, B in I imply A | B in I, and B inside A in I implies B in I.

    Holds for every ideal of P(X), since A | B = A + B + AB and B = BA.
    """
    family = set(members)
    if not family:
        return False
    size = next(iter(family)).size
    for a in family:
        if any(a | b not in family for b in family):
            return False
        if any(FinSubset(size, sub) not in family for sub in _subsets_of(a.bits)):
            return False
    return True


def _subsets_of(bits: int) -> Iterable[int]:
    sub = bits
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & bits
