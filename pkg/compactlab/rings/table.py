"""
Table Rings

Finite rings given by explicit addition and multiplication tables. Used for quotients and
localizations, for rings that are not products of atoms (Z/6 presented directly, F4,
F2[x]/(x^2), ...), and for adversarially relabeled copies of product rings.
"""

import logging
from collections.abc import Callable, Sequence
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from compactlab.config import settings
from compactlab.errors import CapacityError
from compactlab.rings.base import FiniteRing, IndexArray

logger = logging.getLogger(__name__)


class TableRing(FiniteRing):
    """
    Ring given by Cayley tables.

    Args:
        add: n x n addition table of element indices
        mul: n x n multiplication table of element indices
        zero: Index of the additive identity
        one: Index of the multiplicative identity
        cap: Order cap (defaults to TABLE_RING_CAP)

    Raises:
        ValueError: Malformed tables or an element without additive inverse
        CapacityError: Order exceeds the cap

    Ring axioms are not checked here; see ``check_ring_axioms``.
    """

    def __init__(
        self,
        add: ArrayLike,
        mul: ArrayLike,
        zero: int,
        one: int,
        cap: int | None = None,
    ):
        add_table = np.asarray(add, dtype=np.int64)
        mul_table = np.asarray(mul, dtype=np.int64)
        n = add_table.shape[0] if add_table.ndim == 2 else -1
        limit = settings.TABLE_RING_CAP if cap is None else cap
        if n > limit:
            raise CapacityError("table ring order", limit, n)
        if n < 1 or add_table.shape != (n, n) or mul_table.shape != (n, n):
            raise ValueError(
                f"Tables must be square and of equal size, got {add_table.shape} and {mul_table.shape}"
            )
        if add_table.min() < 0 or add_table.max() >= n or mul_table.min() < 0 or mul_table.max() >= n:
            raise ValueError(f"Table entries must be element indices in [0, {n})")
        if not (0 <= zero < n and 0 <= one < n):
            raise ValueError(f"zero={zero} and one={one} must be element indices in [0, {n})")

        negatives = np.argmax(add_table == zero, axis=1)
        if not (add_table[np.arange(n), negatives] == zero).all():
            raise ValueError("Every element needs an additive inverse")

        self._add = add_table
        self._mul = mul_table
        self._neg = negatives.astype(np.int64)
        super().__init__(order=n, zero=int(zero), one=int(one))

    @classmethod
    def from_operations(
        cls,
        n: int,
        add: Callable[[int, int], int],
        mul: Callable[[int, int], int],
        zero: int = 0,
        one: int = 1,
    ) -> "TableRing":
        """Tabulate scalar operations on indices 0..n-1."""
        add_table = [[add(a, b) for b in range(n)] for a in range(n)]
        mul_table = [[mul(a, b) for b in range(n)] for a in range(n)]
        return cls(add_table, mul_table, zero, one)

    @classmethod
    def from_ring(cls, ring: FiniteRing, relabel: Sequence[int] | None = None) -> "TableRing":
        """
        Tabulate another ring, optionally renaming element a to relabel[a].

        Args:
            ring: Source ring
            relabel: Permutation of 0..order-1

        Returns:
            TableRing isomorphic to ``ring`` via the relabeling
        """
        add, mul = ring.full_tables()
        if relabel is None:
            return cls(add, mul, ring.zero, ring.one)
        perm = np.asarray(relabel, dtype=np.int64)
        if sorted(perm.tolist()) != list(range(ring.order)):
            raise ValueError("relabel must be a permutation of the ring's elements")
        inverse = np.argsort(perm)
        new_add = perm[add[inverse[:, None], inverse[None, :]]]
        new_mul = perm[mul[inverse[:, None], inverse[None, :]]]
        return cls(new_add, new_mul, int(perm[ring.zero]), int(perm[ring.one]))

    def add_many(self, a: ArrayLike, b: ArrayLike) -> IndexArray:
        return self._add[np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)]

    def mul_many(self, a: ArrayLike, b: ArrayLike) -> IndexArray:
        return self._mul[np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)]

    def neg_many(self, a: ArrayLike) -> IndexArray:
        return self._neg[np.asarray(a, dtype=np.int64)]

    def full_tables(self) -> tuple[IndexArray, IndexArray]:
        return self._add.copy(), self._mul.copy()

    def element_label(self, a: int) -> int:
        return int(a)

    def describe(self) -> dict[str, Any]:
        return {
            "table": {
                "n": self.order,
                "add": self._add.tolist(),
                "mul": self._mul.tolist(),
                "zero": self.zero,
                "one": self.one,
            }
        }


def cyclic(modulus: int) -> TableRing:
    """Z/n with elements 0..n-1 in their usual order."""
    if modulus < 1:
        raise ValueError(f"Modulus must be positive, got {modulus}")
    return TableRing.from_operations(
        modulus,
        lambda a, b: (a + b) % modulus,
        lambda a, b: (a * b) % modulus,
        zero=0,
        one=1 % modulus,
    )


def galois_field_four() -> TableRing:
    """F4 with elements c0 + c1*t encoded as c0 + 2*c1, where t^2 = t + 1."""

    def mul(a: int, b: int) -> int:
        a0, a1, b0, b1 = a & 1, a >> 1, b & 1, b >> 1
        c0 = (a0 * b0 + a1 * b1) % 2
        c1 = (a0 * b1 + a1 * b0 + a1 * b1) % 2
        return c0 + 2 * c1

    return TableRing.from_operations(4, lambda a, b: a ^ b, mul)


def dual_numbers(modulus: int = 2) -> TableRing:
    """Z/m[e]/(e^2) with a + b*e encoded as a + m*b."""

    def split(v: int) -> tuple[int, int]:
        return v % modulus, v // modulus

    def add(u: int, v: int) -> int:
        (a, b), (c, d) = split(u), split(v)
        return (a + c) % modulus + modulus * ((b + d) % modulus)

    def mul(u: int, v: int) -> int:
        (a, b), (c, d) = split(u), split(v)
        return (a * c) % modulus + modulus * ((a * d + b * c) % modulus)

    return TableRing.from_operations(modulus * modulus, add, mul)


def square_zero_plane() -> TableRing:
    """F2[x,y]/(x,y)^2: a + b*x + c*y encoded as a + 2b + 4c; local of order 8."""

    def add(u: int, v: int) -> int:
        return u ^ v

    def mul(u: int, v: int) -> int:
        a, b, c = u & 1, (u >> 1) & 1, (u >> 2) & 1
        d, e, f = v & 1, (v >> 1) & 1, (v >> 2) & 1
        return (a * d) % 2 + 2 * ((a * e + b * d) % 2) + 4 * ((a * f + c * d) % 2)

    return TableRing.from_operations(8, add, mul)


def galois_ring_four_squared() -> TableRing:
    """Z/4[t]/(t^2 + t + 1): a + b*t encoded as a + 4b; local with residue field F4."""

    def add(u: int, v: int) -> int:
        return ((u % 4 + v % 4) % 4) + 4 * ((u // 4 + v // 4) % 4)

    def mul(u: int, v: int) -> int:
        a, b, c, d = u % 4, u // 4, v % 4, v // 4
        # t^2 = -t - 1
        const = (a * c - b * d) % 4
        lin = (a * d + b * c - b * d) % 4
        return const + 4 * lin

    return TableRing.from_operations(16, add, mul)
