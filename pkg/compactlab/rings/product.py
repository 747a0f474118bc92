"""
Product Rings

Componentwise products of finite rings indexed by a finite label set X. The usual case is a
product of local atoms Z/p^k; products of arbitrary finite rings are also supported so that
quotients and localizations can be multiplied together.

Elements are encoded in mixed radix with the first factor most significant, so element
indices sort in lexicographic component order.
"""

import itertools
import logging
from collections.abc import Sequence
from functools import cached_property
from math import prod
from typing import Any

import numpy as np
from numpy.typing import ArrayLike

from compactlab.config import settings
from compactlab.errors import CapacityError
from compactlab.rings.atoms import AtomRing, LocalAtom
from compactlab.rings.base import FiniteRing, IndexArray

logger = logging.getLogger(__name__)


class ProductRing(FiniteRing):
    """
    Product of finite rings with a projection per label.

    Args:
        factors: The factor rings, one per label
        labels: Distinct labels naming the factors
        cap: Order cap (defaults to PRODUCT_RING_CAP)

    Raises:
        ValueError: No factors, or labels missing/duplicated
        CapacityError: The product order exceeds the cap
    """

    def __init__(
        self,
        factors: Sequence[FiniteRing],
        labels: Sequence[str] | None = None,
        cap: int | None = None,
    ):
        if not factors:
            raise ValueError("A product ring needs at least one factor")
        labels = [str(i) for i in range(len(factors))] if labels is None else list(labels)
        if len(labels) != len(factors):
            raise ValueError(f"Got {len(labels)} labels for {len(factors)} factors")
        if len(set(labels)) != len(labels):
            raise ValueError(f"Product labels must be distinct, got {labels}")

        limit = settings.PRODUCT_RING_CAP if cap is None else cap
        sizes = [factor.order for factor in factors]
        order = prod(sizes)
        if order > limit:
            raise CapacityError("product ring order", limit, order)

        self.factors: tuple[FiniteRing, ...] = tuple(factors)
        self.labels: tuple[str, ...] = tuple(labels)
        self._weights = np.array(
            [prod(sizes[i + 1 :]) for i in range(len(sizes))], dtype=np.int64
        )
        self._components = np.array(
            list(itertools.product(*(range(size) for size in sizes))), dtype=np.int64
        ).reshape(order, len(sizes))

        zero = self.encode([factor.zero for factor in factors])
        one = self.encode([factor.one for factor in factors])
        super().__init__(order=order, zero=zero, one=one)
        logger.debug(f"Built product ring of order {order} over labels {self.labels}")

    # Encoding

    def encode(self, components: Sequence[int]) -> int:
        if len(components) != len(self.factors):
            raise ValueError(
                f"Expected {len(self.factors)} components, got {len(components)}"
            )
        for value, factor, label in zip(components, self.factors, self.labels):
            if not 0 <= int(value) < factor.order:
                raise ValueError(f"Component {value} out of range for factor {label}")
        return int(np.dot(np.asarray(components, dtype=np.int64), self._weights))

    def encode_many(self, components: ArrayLike) -> IndexArray:
        return np.asarray(components, dtype=np.int64) @ self._weights

    def components(self, a: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self._components[a])

    @property
    def component_matrix(self) -> IndexArray:
        """Component of every element at every label, shape (order, len(labels))."""
        return self._components

    # Backend primitives

    def _componentwise(self, op: str, a: ArrayLike, b: ArrayLike | None = None) -> IndexArray:
        ca = self._components[np.asarray(a, dtype=np.int64)]
        if b is None:
            out = np.empty(ca.shape, dtype=np.int64)
            for i, factor in enumerate(self.factors):
                out[..., i] = factor.neg_many(ca[..., i])
            return out @ self._weights
        cb = self._components[np.asarray(b, dtype=np.int64)]
        ca, cb = np.broadcast_arrays(ca, cb)
        out = np.empty(ca.shape, dtype=np.int64)
        for i, factor in enumerate(self.factors):
            if op == "add":
                out[..., i] = factor.add_many(ca[..., i], cb[..., i])
            else:
                out[..., i] = factor.mul_many(ca[..., i], cb[..., i])
        return out @ self._weights

    def add_many(self, a: ArrayLike, b: ArrayLike) -> IndexArray:
        return self._componentwise("add", a, b)

    def mul_many(self, a: ArrayLike, b: ArrayLike) -> IndexArray:
        return self._componentwise("mul", a, b)

    def neg_many(self, a: ArrayLike) -> IndexArray:
        return self._componentwise("neg", a)

    # Labels and projections

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise ValueError(f"Unknown label: {label}. Must be one of {list(self.labels)}") from None

    def project(self, a: int, label: str) -> int:
        """The component pi_x(a) as an element index of the factor at ``label``."""
        return int(self._components[a, self.label_index(label)])

    def delta(self, label: str) -> int:
        """Kronecker element: one at ``label``, zero elsewhere."""
        position = self.label_index(label)
        comps = [
            factor.one if i == position else factor.zero for i, factor in enumerate(self.factors)
        ]
        return self.encode(comps)

    def embed(self, label: str, value: int) -> int:
        """Element with ``value`` at ``label`` and zero elsewhere."""
        position = self.label_index(label)
        comps = [value if i == position else factor.zero for i, factor in enumerate(self.factors)]
        return self.encode(comps)

    @cached_property
    def is_atom_product(self) -> bool:
        return all(isinstance(factor, AtomRing) for factor in self.factors)

    @property
    def atoms(self) -> tuple[LocalAtom, ...]:
        if not self.is_atom_product:
            raise TypeError("Ring has factors that are not local atoms")
        return tuple(factor.atom for factor in self.factors)  # type: ignore[attr-defined]

    def element_label(self, a: int) -> tuple[Any, ...]:
        return tuple(
            factor.element_label(int(c)) for factor, c in zip(self.factors, self._components[a])
        )

    def describe(self) -> dict[str, Any]:
        if self.is_atom_product:
            return {
                "product": [atom.to_dict() for atom in self.atoms],
                "labels": list(self.labels),
            }
        add, mul = self.full_tables()
        return {
            "table": {
                "n": self.order,
                "add": add.tolist(),
                "mul": mul.tolist(),
                "zero": self.zero,
                "one": self.one,
            }
        }

    def __repr__(self) -> str:
        names = " x ".join(
            str(factor.atom) if isinstance(factor, AtomRing) else f"T{factor.order}"
            for factor in self.factors
        )
        return f"ProductRing({names})"


def product(
    factors: Sequence[LocalAtom],
    labels: Sequence[str] | None = None,
    cap: int | None = None,
) -> ProductRing:
    """
    Build the product of local atoms Z/p_i^k_i.

    Args:
        factors: Atoms, one per label
        labels: Label set X (defaults to "0", "1", ...)
        cap: Order cap (defaults to PRODUCT_RING_CAP)

    Returns:
        Componentwise product ring with projections per label
    """
    return ProductRing([AtomRing(atom) for atom in factors], labels, cap=cap)


def product_of_rings(
    factors: Sequence[FiniteRing],
    labels: Sequence[str] | None = None,
    cap: int | None = None,
) -> ProductRing:
    """Product of arbitrary finite rings (quotients, localizations, table rings)."""
    return ProductRing(factors, labels, cap=cap)

