"""
Finite Ring Base

Common interface for exactly represented finite commutative rings. Elements are integer
indices 0..order-1. Every backend supplies vectorized addition, multiplication and negation
over numpy index arrays (any broadcastable shapes), so ideal and spectrum code can work a
whole Cayley-table row at a time.

Subsets of a ring (ideals, multiplicative sets) are carried as Python integers used as bit
vectors; the helpers at the bottom convert between those and numpy boolean masks.
"""

from abc import ABC, abstractmethod
from functools import cached_property
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

IndexArray = NDArray[np.int64]
BoolArray = NDArray[np.bool_]


class FiniteRing(ABC):
    """
    Abstract finite commutative ring with identity.

    Ring objects are compared by identity. Two rings are only ever related through an
    explicitly constructed map, never by structural comparison.

    Args:
        order: Number of elements
        zero: Index of the additive identity
        one: Index of the multiplicative identity
    """

    def __init__(self, order: int, zero: int, one: int):
        if order < 1:
            raise ValueError(f"Ring order must be positive, got {order}")
        self.order = order
        self.zero = zero
        self.one = one

    # Backend primitives

    @abstractmethod
    def add_many(self, a: ArrayLike, b: ArrayLike) -> IndexArray:
        """Elementwise sum of two broadcastable index arrays."""

    @abstractmethod
    def mul_many(self, a: ArrayLike, b: ArrayLike) -> IndexArray:
        """Elementwise product of two broadcastable index arrays."""

    @abstractmethod
    def neg_many(self, a: ArrayLike) -> IndexArray:
        """Elementwise additive inverse."""

    @abstractmethod
    def element_label(self, a: int) -> Any:
        """Human-readable form of element ``a`` (component tuple or plain index)."""

    @abstractmethod
    def describe(self) -> dict[str, Any]:
        """Ring description in the textual file format."""

    # Scalar and row helpers

    def elements(self) -> IndexArray:
        return np.arange(self.order, dtype=np.int64)

    def add(self, a: int, b: int) -> int:
        return int(self.add_many(a, b))

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_many(a, b))

    def neg(self, a: int) -> int:
        return int(self.neg_many(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def sub_many(self, a: ArrayLike, b: ArrayLike) -> IndexArray:
        return self.add_many(a, self.neg_many(b))

    def power(self, a: int, exponent: int) -> int:
        result = self.one
        for _ in range(exponent):
            result = self.mul(result, a)
        return result

    def add_row(self, a: int) -> IndexArray:
        """``a + b`` for every element ``b``, indexed by ``b``."""
        return self.add_many(a, self.elements())

    def mul_row(self, a: int) -> IndexArray:
        """``a * b`` for every element ``b``, indexed by ``b``; as a set this is the ideal (a)."""
        return self.mul_many(a, self.elements())

    def full_tables(self) -> tuple[IndexArray, IndexArray]:
        """Complete addition and multiplication tables, shape (order, order)."""
        idx = self.elements()
        return self.add_many(idx[:, None], idx[None, :]), self.mul_many(idx[:, None], idx[None, :])

    # Cached element classes

    @cached_property
    def unit_mask(self) -> BoolArray:
        mask = np.zeros(self.order, dtype=bool)
        for a in range(self.order):
            mask[a] = bool((self.mul_row(a) == self.one).any())
        return mask

    @cached_property
    def nilpotent_mask(self) -> BoolArray:
        # a nilpotent element of a ring of order n has a^k = 0 for some k <= log2(n) + 1
        elems = self.elements()
        powers = elems.copy()
        mask = powers == self.zero
        for _ in range(self.order.bit_length() + 1):
            powers = self.mul_many(powers, elems)
            mask |= powers == self.zero
        return mask

    @cached_property
    def idempotent_mask(self) -> BoolArray:
        elems = self.elements()
        return self.mul_many(elems, elems) == elems

    @property
    def is_zero_ring(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self.order})"


def mask_from_bools(flags: ArrayLike) -> int:
    """Pack a boolean array into an integer bit vector (bit i set iff flags[i])."""
    packed = np.packbits(np.asarray(flags, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def bools_from_mask(mask: int, size: int) -> BoolArray:
    nbytes = max(1, (size + 7) // 8)
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].astype(bool)


def indices_from_mask(mask: int, size: int) -> IndexArray:
    return np.flatnonzero(bools_from_mask(mask, size)).astype(np.int64)


def mask_from_indices(indices: ArrayLike, size: int) -> int:
    flags = np.zeros(size, dtype=bool)
    flags[np.asarray(indices, dtype=np.int64)] = True
    return mask_from_bools(flags)
