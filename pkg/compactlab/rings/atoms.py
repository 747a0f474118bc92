"""
Local Atoms

The local rings Z/p^k used as factors of product rings. An atom is local with maximal ideal
generated by p and residue field of p elements.
"""

from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike
from sympy import isprime

from compactlab.rings.base import FiniteRing, IndexArray


@dataclass(frozen=True)
class LocalAtom:
    """
    The ring Z/p^k.

    Args:
        prime: The prime p (checked at construction)
        exponent: k >= 1
    """

    prime: int
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.exponent < 1:
            raise ValueError(f"Atom exponent must be at least 1, got {self.exponent}")
        if not isprime(self.prime):
            raise ValueError(f"Atom modulus base must be prime, got {self.prime}")

    @property
    def modulus(self) -> int:
        return int(self.prime**self.exponent)

    @property
    def is_field(self) -> bool:
        return self.exponent == 1

    def to_dict(self) -> dict[str, int]:
        return {"p": self.prime, "k": self.exponent}

    def __str__(self) -> str:
        if self.exponent == 1:
            return f"Z/{self.prime}"
        return f"Z/{self.prime}^{self.exponent}"


class AtomRing(FiniteRing):
    """Z/p^k as a FiniteRing; the element index is the residue itself."""

    def __init__(self, atom: LocalAtom):
        self.atom = atom
        self.modulus = atom.modulus
        super().__init__(order=self.modulus, zero=0, one=1)

    def add_many(self, a: ArrayLike, b: ArrayLike) -> IndexArray:
        return (np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)) % self.modulus

    def mul_many(self, a: ArrayLike, b: ArrayLike) -> IndexArray:
        return (np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64)) % self.modulus

    def neg_many(self, a: ArrayLike) -> IndexArray:
        return (-np.asarray(a, dtype=np.int64)) % self.modulus

    def in_maximal_ideal(self, a: int) -> bool:
        return a % self.atom.prime == 0

    def element_label(self, a: int) -> int:
        return int(a)

    def describe(self) -> dict[str, Any]:
        return {"product": [self.atom.to_dict()], "labels": ["0"]}

    def __repr__(self) -> str:
        return f"AtomRing({self.atom})"
