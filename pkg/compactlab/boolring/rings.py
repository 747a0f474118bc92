"""
Boolean Rings of Sets

Three kinds of Boolean rings: the full power set ring of a finite universe, the ring of
finite and cofinite subsets of the naturals, and the subring of P(N) generated by the finite
sets together with finitely many ultimately periodic generators. Membership in a generated
ring is decided through the atoms of the finite Boolean algebra spanned by the generators:
s belongs iff it meets every atom in a finite or cofinite part of that atom.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property

from compactlab.boolring.finsubset import FinSubset
from compactlab.boolring.upset import UPSet
from compactlab.config import settings
from compactlab.errors import CapacityError, ConsistencyError

logger = logging.getLogger(__name__)


class RingKind(StrEnum):
    FULL_FINITE = "full-finite"
    FIN_COFIN = "fin-cofin"
    GENERATED = "generated"


@dataclass(frozen=True)
class AtomDecomposition:
    """
    Minimal nonzero elements of the Boolean algebra generated by a list of sets.

    Args:
        atoms: Pairwise disjoint non-empty sets covering N, in canonical order
        infinite_flags: Whether each atom is infinite
    """

    atoms: tuple[UPSet, ...]
    infinite_flags: tuple[bool, ...]

    @property
    def infinite_atoms(self) -> tuple[UPSet, ...]:
        return tuple(atom for atom, infinite in zip(self.atoms, self.infinite_flags) if infinite)

    def verify(self) -> None:
        """
        Raises:
            ConsistencyError: Atoms overlap, miss part of N, or carry a wrong finiteness flag
        """
        union = UPSet.empty()
        for i, atom in enumerate(self.atoms):
            if atom.is_empty:
                raise ConsistencyError(f"Atom {atom} is empty")
            if not (union & atom).is_empty:
                raise ConsistencyError(f"Atom {atom} overlaps an earlier atom")
            if self.infinite_flags[i] == atom.is_finite:
                raise ConsistencyError(f"Wrong finiteness flag on atom {atom}")
            union = union | atom
        if not union.is_universe:
            raise ConsistencyError(f"Atoms leave {~union} uncovered")

    def atom_of(self, n: int) -> int:
        for i, atom in enumerate(self.atoms):
            if n in atom:
                return i
        raise ConsistencyError(f"No atom contains {n}")


def atom_decompose(generators: Iterable[UPSet]) -> AtomDecomposition:
    """
    Atoms of the Boolean algebra generated by ``generators``.

    Each generator splits every current atom C into C & A and C - A; empty pieces are
    dropped. The result is exactly the set of non-empty Boolean combinations.

    Raises:
        CapacityError: More than GENERATOR_CAP generators
    """
    gens = list(generators)
    if len(gens) > settings.GENERATOR_CAP:
        raise CapacityError("generator count", settings.GENERATOR_CAP, len(gens))
    atoms = [UPSet.universe()]
    for generator in gens:
        split = []
        for atom in atoms:
            for piece in (atom & generator, atom - generator):
                if not piece.is_empty:
                    split.append(piece)
        atoms = split
    atoms.sort(key=UPSet.sort_key)
    decomposition = AtomDecomposition(tuple(atoms), tuple(not a.is_finite for a in atoms))
    logger.debug(f"{len(gens)} generators split N into {len(atoms)} atoms")
    return decomposition


@dataclass(frozen=True)
class BoolRing:
    """
    A Boolean ring of sets.

    Args:
        kind: Which family of rings this is
        universe_size: Universe size for FULL_FINITE rings
        generators: Extra generators for GENERATED rings (canonical, duplicates removed)
    """

    kind: RingKind
    universe_size: int | None = None
    generators: tuple[UPSet, ...] = field(default=())

    @classmethod
    def full_finite(cls, size: int) -> "BoolRing":
        if size < 0:
            raise ValueError(f"Universe size must be non-negative, got {size}")
        return cls(RingKind.FULL_FINITE, universe_size=size)

    @classmethod
    def fin_cofin(cls) -> "BoolRing":
        return cls(RingKind.FIN_COFIN)

    @classmethod
    def generated(cls, generators: Iterable[UPSet]) -> "BoolRing":
        """
        The subring of P(N) generated by Fin(N) and ``generators``.

        No generators gives the finite/cofinite ring.

        Raises:
            CapacityError: More than GENERATOR_CAP generators
        """
        gens: list[UPSet] = []
        for g in generators:
            g = g.canonical()
            if g not in gens:
                gens.append(g)
        if len(gens) > settings.GENERATOR_CAP:
            raise CapacityError("generator count", settings.GENERATOR_CAP, len(gens))
        if not gens:
            return cls.fin_cofin()
        return cls(RingKind.GENERATED, generators=tuple(gens))

    @cached_property
    def decomposition(self) -> AtomDecomposition:
        if self.kind is RingKind.FULL_FINITE:
            raise TypeError("Full finite power set rings have no symbolic atom decomposition")
        return atom_decompose(self.generators)

    def contains(self, s: UPSet | FinSubset) -> bool:
        return membership_in_ring(self, s)

    def describe(self) -> str:
        match self.kind:
            case RingKind.FULL_FINITE:
                return f"P({{0..{self.universe_size - 1}}})" if self.universe_size else "P({})"
            case RingKind.FIN_COFIN:
                return "Fin/Cofin(N)"
            case RingKind.GENERATED:
                return "<Fin(N), " + ", ".join(str(g) for g in self.generators) + ">"


def membership_in_ring(ring: BoolRing, s: UPSet | FinSubset) -> bool:
    """
    Decide whether ``s`` is an element of ``ring``.

    Args:
        ring: The Boolean ring
        s: A subset of N (or of a finite universe)

    Returns:
        FULL_FINITE: s lies inside the universe. FIN_COFIN: s is finite or cofinite.
        GENERATED: every atom meets s or its complement in a finite set.
    """
    if isinstance(s, FinSubset):
        return ring.kind is RingKind.FULL_FINITE and s.size == ring.universe_size
    match ring.kind:
        case RingKind.FULL_FINITE:
            return s.is_finite and all(m < (ring.universe_size or 0) for m in s.finite_members())
        case RingKind.FIN_COFIN:
            return s.is_finite or s.is_cofinite
        case RingKind.GENERATED:
            return all(
                (s & atom).is_finite or (atom - s).is_finite
                for atom in ring.decomposition.infinite_atoms
            )


def same_ring(first: BoolRing, second: BoolRing) -> bool:
    """Equality of the rings as sets of sets, decided on generators."""
    if RingKind.FULL_FINITE in (first.kind, second.kind):
        return first.kind == second.kind and first.universe_size == second.universe_size
    return all(second.contains(g) for g in first.generators) and all(
        first.contains(g) for g in second.generators
    )
