"""
Totally Disconnected Compactifications of N

For a Boolean ring R' with Fin(N) inside R' inside P(N), Spec R' is a compactification of the
discrete naturals. When R' is generated by Fin(N) and finitely many ultimately periodic sets,
its points are the principal ideals m_x and one point at infinity per infinite atom of the
generators, and D(A) = {x : x in A} together with the infinity points whose atom meets A in an
infinite set. With no generators this is the one-point (Alexandroff) compactification, whose
point at infinity is Fin(N) itself.
"""

import itertools
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import reduce

from compactlab.boolring.rings import AtomDecomposition, BoolRing
from compactlab.boolring.upset import UPSet, oracle_horizon
from compactlab.config import settings
from compactlab.errors import CapacityError, ConsistencyError
from compactlab.stone.points import ExplicitMaxIdeal, InfinityPoint, PrincipalPoint
from compactlab.topspace.space import FiniteSpace

logger = logging.getLogger(__name__)

SymbolicPoint = PrincipalPoint | InfinityPoint


@dataclass(frozen=True)
class BasicOpen:
    """D(A): the naturals in A and the indices of the infinity points it contains."""

    naturals: UPSet
    infinity: frozenset[int]

    def contains(self, point: SymbolicPoint, compactification: "Compactification") -> bool:
        if isinstance(point, PrincipalPoint):
            return point.x in self.naturals
        return compactification.infinity.index(point) in self.infinity

    @property
    def is_empty(self) -> bool:
        return self.naturals.is_empty and not self.infinity


@dataclass(frozen=True)
class Compactification:
    """
    Spec of a finitely generated ring of sets, presented by its principal points and its
    finitely many points at infinity.

    Args:
        ring: The generating ring R'
        decomposition: Atoms of the generators
        infinity: One point per infinite atom, in canonical atom order
    """

    ring: BoolRing
    decomposition: AtomDecomposition = field(repr=False)
    infinity: tuple[InfinityPoint, ...]

    def eta(self, x: int) -> PrincipalPoint:
        if x < 0:
            raise ValueError(f"Naturals only, got {x}")
        return PrincipalPoint(x)

    def _require_member(self, s: UPSet) -> None:
        if not self.ring.contains(s):
            raise ValueError(f"{s} is not an element of {self.ring.describe()}")

    def basic_open(self, s: UPSet) -> BasicOpen:
        """
        D(A) for A in the ring.

        Raises:
            ValueError: A is not an element of the ring
        """
        self._require_member(s)
        return BasicOpen(
            s, frozenset(i for i, point in enumerate(self.infinity) if point.in_basic_open(s))
        )

    def contains(self, point: SymbolicPoint, s: UPSet) -> bool:
        """Whether A lies in the ideal ``point``; equivalently, ``point`` is outside D(A)."""
        self._require_member(s)
        return point.contains(s)

    def sample_points(self, count: int) -> list[SymbolicPoint]:
        return [PrincipalPoint(x) for x in range(count)] + list(self.infinity)

    def separating_set(self, first: SymbolicPoint, second: SymbolicPoint) -> UPSet:
        """
        A in the ring with ``first`` in D(A) and ``second`` in D(1 + A).

        Raises:
            ValueError: The points are equal
            ConsistencyError: The chosen set fails to separate
        """
        if first == second:
            raise ValueError(f"Cannot separate {first} from itself")
        if isinstance(first, PrincipalPoint):
            candidate = UPSet.finite([first.x])
        elif isinstance(second, PrincipalPoint):
            candidate = ~UPSet.finite([second.x])
        else:
            candidate = first.atom
        if not (
            self.ring.contains(candidate)
            and first.in_basic_open(candidate)
            and second.in_basic_open(~candidate)
        ):
            raise ConsistencyError(f"{candidate} does not separate {first} and {second}")
        return candidate

    def is_hausdorff_on(self, points: Sequence[SymbolicPoint]) -> bool:
        for i, first in enumerate(points):
            for second in points[i + 1 :]:
                try:
                    self.separating_set(first, second)
                except ConsistencyError:
                    return False
        return True

    def dense_witness(self, s: UPSet) -> int | None:
        """A natural inside D(A), or None when D(A) is empty."""
        open_set = self.basic_open(s)
        witness = s.first()
        if open_set.is_empty != (witness is None):
            raise ConsistencyError(f"D({s}) is non-empty but misses every principal point")
        return witness

    def basic_open_is_clopen(self, s: UPSet, points: Iterable[SymbolicPoint]) -> bool:
        """D(A) and D(1 + A) partition the given points."""
        inside, outside = self.basic_open(s), self.basic_open(~s)
        return all(
            inside.contains(point, self) != outside.contains(point, self) for point in points
        )

    def is_open_set(self, naturals: UPSet, infinity: frozenset[int]) -> bool:
        """
        Whether the naturals in ``naturals`` together with the listed points at infinity form
        an open set: each listed point needs a basic open D(atom minus a finite set) inside it.
        """
        for i in infinity:
            atom = self.infinity[i].atom
            if not (atom - naturals).is_finite:
                return False
            neighbourhood = self.basic_open(atom & naturals)
            if i not in neighbourhood.infinity or not neighbourhood.infinity <= infinity:
                return False
            if not (neighbourhood.naturals - naturals).is_empty:
                return False
        return True

    def clopen_sets(self) -> list[BasicOpen]:
        """
        Every clopen set up to finite sets of naturals: unions of D(atom) over subsets of the
        points at infinity whose complement is open as well.

        Raises:
            CapacityError: More than CLOPEN_ATOM_CAP points at infinity
        """
        count = len(self.infinity)
        if count > settings.CLOPEN_ATOM_CAP:
            raise CapacityError(
                "points at infinity searched for clopens", settings.CLOPEN_ATOM_CAP, count
            )
        everything = frozenset(range(count))
        found = []
        for chosen in itertools.product((False, True), repeat=count):
            inside = frozenset(i for i in range(count) if chosen[i])
            naturals = reduce(
                lambda acc, i: acc | self.infinity[i].atom, sorted(inside), UPSet.empty()
            )
            complement_open = self.is_open_set(~naturals, everything - inside)
            if complement_open and self.is_open_set(naturals, inside):
                found.append(BasicOpen(naturals, inside))
        return found

    def describe(self) -> dict[str, object]:
        return {
            "ring": self.ring.describe(),
            "infinity": [point.to_dict() for point in self.infinity],
            "atoms": [atom.to_dict() for atom in self.decomposition.atoms],
        }


def compactify(generators: Iterable[UPSet]) -> Compactification:
    """
    Spec of the ring generated by Fin(N) and ``generators``.

    Raises:
        CapacityError: More than GENERATOR_CAP generators
    """
    ring = BoolRing.generated(generators)
    decomposition = ring.decomposition
    decomposition.verify()
    infinity = tuple(InfinityPoint(atom) for atom in decomposition.infinite_atoms)
    logger.debug(f"Compactified N by {ring.describe()}: {len(infinity)} points at infinity")
    return Compactification(ring, decomposition, infinity)


def alexandroff() -> Compactification:
    """The one-point compactification of N; its point at infinity is Fin(N)."""
    return compactify([])


@dataclass(frozen=True)
class MaximalityWitness:
    """m in M and r in R' with m + r*A = 1."""

    m: UPSet
    r: UPSet
    element: UPSet

    def holds(self) -> bool:
        return (self.m + self.r * self.element).is_universe


def maximality_witness(
    ring: BoolRing, point: SymbolicPoint | ExplicitMaxIdeal, element: UPSet
) -> MaximalityWitness:
    """
    Certify that the ideal generated by M and A is the whole ring: m = 1 + A lies in M and
    m + 1*A = 1.

    Raises:
        ValueError: A is not in the ring, or already lies in M
        ConsistencyError: The complement of A is not in M
    """
    if isinstance(point, ExplicitMaxIdeal):
        raise ValueError("Use the finite ultrafilter dictionary for explicit ideals")
    if not ring.contains(element):
        raise ValueError(f"{element} is not an element of {ring.describe()}")
    if point.contains(element):
        raise ValueError(f"{element} already lies in {point}")
    witness = MaximalityWitness(~element, UPSet.universe(), element)
    if not point.contains(witness.m) or not witness.holds():
        raise ConsistencyError(f"1 + {element} is not in {point}")
    return witness


def clop_of_compactification(space: Compactification | FiniteSpace) -> BoolRing:
    """
    The ring of clopens pulled back to the dense part.

    For a compactification of N the clopen sets are found from the topology and their
    naturals generate the pulled-back ring together with Fin(N), since every finite set of
    principal points is clopen. For a finite space the clopens are the unions of components.

    Raises:
        CapacityError: More than CLOPEN_ATOM_CAP points at infinity
    """
    if isinstance(space, FiniteSpace):
        return BoolRing.full_finite(len(space.topology.components()))
    pulled_back = [
        clopen.naturals
        for clopen in space.clopen_sets()
        if not (clopen.naturals.is_finite or clopen.naturals.is_cofinite)
    ]
    if not pulled_back:
        return BoolRing.fin_cofin()
    return BoolRing.generated(pulled_back)


@dataclass(frozen=True)
class CoverResult:
    """
    Either a finite subcover (in input order) or a point no listed open contains.
    """

    covers: bool
    subcover: tuple[UPSet, ...] = ()
    uncovered: SymbolicPoint | None = None


def check_cover(compactification: Compactification, opens: Sequence[UPSet]) -> CoverResult:
    """
    Decide whether D(A_1), ..., D(A_k) cover the compactification.

    They cover iff the A_i cover N and every infinite atom meets some A_i infinitely. A
    covering family is thinned greedily: repeatedly take the set adding the most points at
    infinity, then the most naturals below the oracle horizon, ties broken by canonical order.

    Raises:
        ValueError: Some A_i is not in the ring
    """
    basic = [compactification.basic_open(s) for s in opens]
    union = reduce(lambda a, b: a | b, opens, UPSet.empty())
    hit = set().union(*(b.infinity for b in basic)) if basic else set()
    if not union.is_universe:
        missing = (~union).first()
        return CoverResult(False, uncovered=PrincipalPoint(missing if missing is not None else 0))
    for i, point in enumerate(compactification.infinity):
        if i not in hit:
            return CoverResult(False, uncovered=point)

    horizon = oracle_horizon(*opens) if opens else 0
    order = sorted(range(len(opens)), key=lambda i: (opens[i].sort_key(), i))
    remaining_naturals = UPSet.universe()
    remaining_infinity = set(range(len(compactification.infinity)))
    chosen: list[int] = []
    while not remaining_naturals.is_empty or remaining_infinity:
        best, best_gain = -1, (0, 0)
        for i in order:
            gain = (
                len(basic[i].infinity & remaining_infinity),
                int((opens[i] & remaining_naturals).indicator(horizon).sum()),
            )
            if gain > best_gain:
                best, best_gain = i, gain
        if best < 0:
            raise ConsistencyError("Greedy thinning stalled on a covering family")
        chosen.append(best)
        remaining_naturals = remaining_naturals - opens[best]
        remaining_infinity -= basic[best].infinity
    subcover = tuple(opens[i] for i in sorted(chosen))
    return CoverResult(True, subcover=subcover)
