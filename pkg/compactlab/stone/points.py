"""
Points of Boolean Spectra

A point of Spec of a Boolean ring of sets is one of: the principal ideal of sets missing a
natural x, the ideal of sets meeting an infinite atom C in a finite set (a point at infinity),
or an explicitly listed maximal ideal of a finite power set ring.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

from compactlab.boolring.finsubset import FinSubset
from compactlab.boolring.upset import UPSet


@dataclass(frozen=True)
class PrincipalPoint:
    """m_x: the sets not containing x."""

    x: int

    def contains(self, s: UPSet) -> bool:
        return self.x not in s

    def in_basic_open(self, s: UPSet) -> bool:
        return self.x in s

    def to_dict(self) -> dict[str, Any]:
        return {"principal": self.x}

    def __str__(self) -> str:
        return f"m_{self.x}"


@dataclass(frozen=True)
class InfinityPoint:
    """The sets meeting the infinite atom ``atom`` in a finite set."""

    atom: UPSet

    def contains(self, s: UPSet) -> bool:
        return (s & self.atom).is_finite

    def in_basic_open(self, s: UPSet) -> bool:
        return not self.contains(s)

    def to_dict(self) -> dict[str, Any]:
        return {"infinity_atom": self.atom.to_dict()}

    def __str__(self) -> str:
        return f"inf[{self.atom}]"


@dataclass(frozen=True)
class ExplicitMaxIdeal:
    """
    A maximal ideal of P({0..n-1}) listed by its members.

    Args:
        universe_size: n
        members: Bit vectors of the member subsets
    """

    universe_size: int
    members: frozenset[int]

    def contains(self, s: FinSubset) -> bool:
        return s.bits in self.members

    def in_basic_open(self, s: FinSubset) -> bool:
        return s.bits not in self.members

    def subsets(self) -> list[FinSubset]:
        return [FinSubset(self.universe_size, bits) for bits in sorted(self.members)]

    def to_dict(self) -> dict[str, Any]:
        return {"members": [list(s.members) for s in self.subsets()]}

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in self.subsets()) + "}"


StonePoint = PrincipalPoint | InfinityPoint | ExplicitMaxIdeal


def ideal_law_violations(point: PrincipalPoint | InfinityPoint, samples: Iterable[UPSet]) -> list[str]:
    """
    Check a symbolic point against the ideal laws on a finite sample of ring elements.

    Returns:
        Names of violated laws (empty when the sample shows none)
    """
    elements = list(samples)
    violations = []
    if not point.contains(UPSet.empty()):
        violations.append("contains zero")
    if point.contains(UPSet.universe()):
        violations.append("proper")
    members = [s for s in elements if point.contains(s)]
    if any(not point.contains(a + b) for a in members for b in members):
        violations.append("closed under addition")
    if any(not point.contains(r * a) for a in members for r in elements):
        violations.append("closed under multiplication")
    if any(point.contains(s) == point.contains(~s) for s in elements):
        violations.append("exactly one of A and its complement")
    return violations
