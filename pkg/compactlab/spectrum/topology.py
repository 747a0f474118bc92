"""
Finite Topologies on Spectra

Topologies are materialized as explicit families of open sets, each open set an integer bit
vector over point indices. A topology generated by a subbasis is computed through minimal
neighbourhoods: on a finite set, U is open iff it contains the minimal neighbourhood of each
of its points, i.e. the opens are the up-sets of the specialization preorder.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property

import networkx as nx
import numpy as np

from compactlab.config import settings
from compactlab.errors import CapacityError, PointSetMismatch
from compactlab.spectrum.enumeration import SpecSite

logger = logging.getLogger(__name__)


class Comparison(StrEnum):
    FINER = "finer"
    COARSER = "coarser"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if (mask >> i) & 1]


@dataclass(frozen=True)
class FiniteTopology:
    """
    A topology on points 0..size-1.

    Args:
        size: Number of points
        opens: Open sets as bit vectors
    """

    size: int
    opens: frozenset[int]

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    @classmethod
    def from_neighbourhoods(cls, size: int, neighbourhoods: list[int]) -> "FiniteTopology":
        """
        Topology whose minimal neighbourhoods are ``neighbourhoods`` (must be transitive:
        y in U_x implies U_y inside U_x).
        """
        limit = settings.TOPOLOGY_POINT_CAP
        if size > limit:
            raise CapacityError("topology point count", limit, size)
        masks = np.arange(1 << size, dtype=np.int64)
        is_open = np.ones(len(masks), dtype=bool)
        for x, nbhd in enumerate(neighbourhoods):
            contains_x = ((masks >> x) & 1).astype(bool)
            is_open &= ~contains_x | ((masks & nbhd) == nbhd)
        return cls(size, frozenset(int(m) for m in masks[is_open]))

    @classmethod
    def from_subbasis(cls, size: int, subbasis: Iterable[int]) -> "FiniteTopology":
        full = (1 << size) - 1
        neighbourhoods = [full] * size
        for s in subbasis:
            for x in _bits(s):
                neighbourhoods[x] &= s
        return cls.from_neighbourhoods(size, neighbourhoods)

    @classmethod
    def from_opens(cls, size: int, opens: Iterable[int]) -> "FiniteTopology":
        """
        Validate an explicit open family.

        Raises:
            ValueError: The family misses the empty or whole set, or is not closed under
                pairwise union and intersection
        """
        family = frozenset(opens)
        full = (1 << size) - 1
        if 0 not in family or full not in family:
            raise ValueError("Open family must contain the empty set and the whole space")
        if any(u & ~full for u in family):
            raise ValueError(f"Open set outside the {size} points")
        for u in family:
            for v in family:
                if (u | v) not in family or (u & v) not in family:
                    raise ValueError("Open family is not closed under union and intersection")
        return cls(size, family)

    @classmethod
    def discrete(cls, size: int) -> "FiniteTopology":
        return cls.from_neighbourhoods(size, [1 << x for x in range(size)])

    @classmethod
    def indiscrete(cls, size: int) -> "FiniteTopology":
        return cls(size, frozenset({0, (1 << size) - 1}))

    @cached_property
    def minimal_neighbourhoods(self) -> tuple[int, ...]:
        result = []
        for x in range(self.size):
            nbhd = self.full
            for u in self.opens:
                if (u >> x) & 1:
                    nbhd &= u
            result.append(nbhd)
        return tuple(result)

    def is_open(self, mask: int) -> bool:
        return mask in self.opens

    def is_closed(self, mask: int) -> bool:
        return (self.full & ~mask) in self.opens

    def interior(self, mask: int) -> int:
        result = 0
        for u in self.opens:
            if u & ~mask == 0:
                result |= u
        return result

    def closure(self, mask: int) -> int:
        return self.full & ~self.interior(self.full & ~mask)

    def specialization_graph(self) -> nx.DiGraph:
        """Edge x -> y iff x <= y, i.e. x lies in the closure of y."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.size))
        for x, nbhd in enumerate(self.minimal_neighbourhoods):
            graph.add_edges_from((x, y) for y in _bits(nbhd))
        return graph

    def components(self) -> list[tuple[int, ...]]:
        """Connected components, each sorted, in order of smallest point."""
        graph = self.specialization_graph()
        parts = [tuple(sorted(c)) for c in nx.weakly_connected_components(graph)]
        return sorted(parts)

    def sorted_opens(self) -> list[list[int]]:
        return sorted((_bits(u) for u in self.opens), key=lambda s: (len(s), s))

    def restrict(self, points: list[int]) -> "FiniteTopology":
        """Subspace topology on ``points`` (re-indexed in the given order)."""
        reindexed = set()
        for u in self.opens:
            reindexed.add(sum(1 << i for i, p in enumerate(points) if (u >> p) & 1))
        return FiniteTopology(len(points), frozenset(reindexed))


def point_mask(points: Iterable[int]) -> int:
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


def _membership_matrix(site: SpecSite) -> np.ndarray:
    """membership[i, f] iff element f lies in point i."""
    return np.array([p.flags for p in site.points], dtype=bool).reshape(
        len(site.points), site.ring.order
    )


def basic_open(site: SpecSite, f: int) -> int:
    """D(f) on the site: points not containing f."""
    return point_mask(i for i, p in enumerate(site.points) if f not in p)


def basic_closed(site: SpecSite, f: int) -> int:
    """V(f) on the site: points containing f."""
    return point_mask(i for i, p in enumerate(site.points) if f in p)


def _column_masks(membership: np.ndarray, invert: bool) -> set[int]:
    cols = ~membership if invert else membership
    return {point_mask(np.flatnonzero(column).tolist()) for column in cols.T}


def zariski_topology(site: SpecSite) -> FiniteTopology:
    """Generated by the basic opens D(f), f in R."""
    subbasis = _column_masks(_membership_matrix(site), invert=True)
    return FiniteTopology.from_subbasis(len(site.points), subbasis)


def flat_topology(site: SpecSite) -> FiniteTopology:
    """Generated by the subbasis V(f), f in R; finite intersections give V(I) for f.g. I."""
    subbasis = _column_masks(_membership_matrix(site), invert=False)
    return FiniteTopology.from_subbasis(len(site.points), subbasis)


def closed_basic_family(site: SpecSite) -> set[int]:
    """{site ∩ V(f) : f in R} as point masks."""
    return _column_masks(_membership_matrix(site), invert=False)


def compare(first: FiniteTopology, second: FiniteTopology) -> Comparison:
    """
    Compare two topologies on the same points.

    Raises:
        PointSetMismatch: The topologies live on different point sets
    """
    if first.size != second.size:
        raise PointSetMismatch(f"Cannot compare topologies on {first.size} and {second.size} points")
    if first.opens == second.opens:
        return Comparison.EQUAL
    if first.opens > second.opens:
        return Comparison.FINER
    if first.opens < second.opens:
        return Comparison.COARSER
    return Comparison.INCOMPARABLE


def clopens(topology: FiniteTopology) -> frozenset[int]:
    return frozenset(u for u in topology.opens if topology.is_closed(u))


def is_hausdorff(topology: FiniteTopology) -> bool:
    # minimal neighbourhoods are the smallest candidates for separating opens
    nbhds = topology.minimal_neighbourhoods
    return all(
        nbhds[x] & nbhds[y] == 0
        for x in range(topology.size)
        for y in range(x + 1, topology.size)
    )


def is_totally_disconnected(topology: FiniteTopology) -> bool:
    return all(len(part) == 1 for part in topology.components())


def is_discrete(topology: FiniteTopology) -> bool:
    return len(topology.opens) == 1 << topology.size
