"""
Stone-Cech Compactification of Finite Spaces

A finite compact Hausdorff space is discrete, so the Stone-Cech compactification of a finite
space X is the quotient of X by the relation x ~ y iff every continuous map from X into a
finite discrete space identifies x and y. Maps into a discrete space are continuous exactly
when they are constant on connected components, so the quotient is the set of components of
the specialization graph. Both descriptions are computed and compared; the universal property
is checked against every map into a discrete space with at most |X| points, which covers every
finite discrete target up to an injection.

Also here: the clopen ring of a finite space, the clopen functor, and the identification of
the components with Spec of the clopen ring.
"""

import itertools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from compactlab.config import settings
from compactlab.errors import CapacityError, ConsistencyError
from compactlab.rings.constructions import RingMap
from compactlab.rings.table import TableRing
from compactlab.spectrum.enumeration import max_ideals
from compactlab.spectrum.topology import (
    FiniteTopology,
    clopens,
    is_discrete,
    point_mask,
    zariski_topology,
)
from compactlab.topspace.convergence import PointMap, is_continuous, preimage
from compactlab.topspace.space import FiniteSpace

logger = logging.getLogger(__name__)

Partition = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class QuotientWitness:
    """
    Args:
        space: The finite space X
        partition: Blocks of the quotient, each sorted, in order of least point
        projection: projection[x] is the block containing x
        topology: The quotient topology (discrete)
    """

    space: FiniteSpace = field(repr=False)
    partition: Partition
    projection: tuple[int, ...]
    topology: FiniteTopology

    def to_dict(self) -> dict[str, object]:
        return {
            "partition": [list(block) for block in self.partition],
            "projection": list(self.projection),
        }


def _projection(size: int, partition: Partition) -> tuple[int, ...]:
    owner = [0] * size
    for index, block in enumerate(partition):
        for x in block:
            owner[x] = index
    return tuple(owner)


@lru_cache(maxsize=1024)
def discrete_target_maps(space: FiniteSpace) -> tuple[tuple[int, ...], ...]:
    """
    Continuous maps from ``space`` into the discrete space on |X| points.

    Every open set of a discrete target is a union of points, so a map is continuous iff each
    of its fibers is open.
    """
    maps = []
    for mapping in itertools.product(range(space.size), repeat=space.size):
        fibers = [0] * space.size
        for x, value in enumerate(mapping):
            fibers[value] |= 1 << x
        if all(space.topology.is_open(fiber) for fiber in fibers if fiber):
            maps.append(mapping)
    return tuple(maps)


def tilde_partition(space: FiniteSpace) -> Partition:
    """x ~ y iff every continuous map into a finite discrete space agrees on x and y."""
    maps = discrete_target_maps(space)
    blocks: list[list[int]] = []
    for x in range(space.size):
        for block in blocks:
            if all(mapping[x] == mapping[block[0]] for mapping in maps):
                block.append(x)
                break
        else:
            blocks.append([x])
    return tuple(tuple(block) for block in blocks)


def partition_is_universal(space: FiniteSpace, partition: Partition) -> bool:
    """
    The projection onto ``partition`` (discrete) is continuous and every continuous map into
    a finite discrete space is constant on its blocks, hence factors uniquely.
    """
    if any(not space.topology.is_open(point_mask(block)) for block in partition):
        return False
    return all(
        all(mapping[x] == mapping[block[0]] for x in block)
        for mapping in discrete_target_maps(space)
        for block in partition
    )


def one_step_coarsenings(partition: Partition) -> Iterator[Partition]:
    for i, j in itertools.combinations(range(len(partition)), 2):
        merged = tuple(sorted(partition[i] + partition[j]))
        rest = [block for k, block in enumerate(partition) if k not in (i, j)]
        yield tuple(sorted([*rest, merged]))


def one_step_refinements(partition: Partition) -> Iterator[Partition]:
    for i, block in enumerate(partition):
        rest = [b for k, b in enumerate(partition) if k != i]
        for r in range(1, len(block)):
            for part in itertools.combinations(block, r):
                if block[0] not in part:
                    continue
                other = tuple(x for x in block if x not in part)
                yield tuple(sorted([*rest, part, other]))


def beta(space: FiniteSpace) -> QuotientWitness:
    """
    Stone-Cech compactification of a finite space as a quotient.

    Raises:
        CapacityError: More than BETA_POINT_CAP points
        ConsistencyError: Components and the relation ~ disagree, or the components fail the
            universal property
    """
    if space.size > settings.BETA_POINT_CAP:
        raise CapacityError("beta point count", settings.BETA_POINT_CAP, space.size)
    partition: Partition = tuple(space.components())
    if tilde_partition(space) != partition:
        raise ConsistencyError("Specialization components differ from the relation ~")
    if not partition_is_universal(space, partition):
        raise ConsistencyError("Component projection fails the universal property")
    logger.debug(f"beta of a {space.size}-point space has {len(partition)} points")
    return QuotientWitness(
        space, partition, _projection(space.size, partition), FiniteTopology.discrete(len(partition))
    )


def beta_is_extremal(space: FiniteSpace, partition: Partition) -> bool:
    """No one-step coarsening or refinement of ``partition`` is universal."""
    return not any(
        partition_is_universal(space, other) for other in one_step_coarsenings(partition)
    ) and not any(partition_is_universal(space, other) for other in one_step_refinements(partition))


# Clopen rings


@dataclass(frozen=True)
class ClopRing:
    """
    Clop(X) as a table ring.

    Args:
        space: The space
        sets: sets[a] is the clopen set represented by element a
        ring: Symmetric difference and intersection on ``sets``
    """

    space: FiniteSpace = field(repr=False)
    sets: tuple[int, ...]
    ring: TableRing = field(repr=False)

    def element_of(self, subset: int) -> int:
        return self.sets.index(subset)


@lru_cache(maxsize=1024)
def clop_ring(space: FiniteSpace) -> ClopRing:
    sets = tuple(sorted(clopens(space.topology)))
    index = {s: i for i, s in enumerate(sets)}
    ring = TableRing.from_operations(
        len(sets),
        lambda a, b: index[sets[a] ^ sets[b]],
        lambda a, b: index[sets[a] & sets[b]],
        zero=index[0],
        one=index[space.topology.full],
    )
    return ClopRing(space, sets, ring)


@dataclass(frozen=True)
class ClopMap:
    """Clop(f): Clop(Y) -> Clop(X), B -> f^-1(B)."""

    source: ClopRing
    target: ClopRing
    ring_map: RingMap

    @property
    def is_injective(self) -> bool:
        return self.ring_map.is_injective()


def image_is_dense(mapping: PointMap, target: FiniteSpace) -> bool:
    return target.topology.closure(point_mask(mapping)) == target.topology.full


def clop_functor(mapping: PointMap, source: FiniteSpace, target: FiniteSpace) -> ClopMap:
    """
    The preimage map on clopen rings of a continuous map ``source -> target``.

    Raises:
        ValueError: The map is not continuous
        ConsistencyError: The preimage map is not a ring map
    """
    if not is_continuous(mapping, source, target):
        raise ValueError(f"Map {list(mapping)} is not continuous")
    clop_target, clop_source = clop_ring(target), clop_ring(source)
    images = tuple(
        clop_source.element_of(preimage(mapping, subset)) for subset in clop_target.sets
    )
    ring_map = RingMap(clop_target.ring, clop_source.ring, images)
    if not ring_map.is_ring_homomorphism():
        raise ConsistencyError("Preimage of clopens is not a ring map")
    return ClopMap(clop_target, clop_source, ring_map)


def injective_when_dense(mapping: PointMap, source: FiniteSpace, target: FiniteSpace) -> bool:
    """False only when f(X) is dense in Y but Clop(f) fails to be injective."""
    if not image_is_dense(mapping, target):
        return True
    return clop_functor(mapping, source, target).is_injective


def pi0_spec_check(space: FiniteSpace) -> bool:
    """
    The components of X correspond to the maximal ideals of Clop(X) by
    K -> {B clopen : B misses K}, and both sides are discrete.
    """
    clop = clop_ring(space)
    site = max_ideals(clop.ring)
    components = [point_mask(block) for block in space.components()]
    expected = {
        frozenset(a for a, subset in enumerate(clop.sets) if subset & block == 0)
        for block in components
    }
    found = {frozenset(ideal.members) for ideal in site.points}
    if expected != found or len(found) != len(components):
        return False
    return is_discrete(zariski_topology(site))


def factor_through(witness: QuotientWitness, mapping: Sequence[int]) -> tuple[int, ...]:
    """
    The factorization h of a continuous map g into a discrete space through the quotient,
    h(block) = g(any point of block).

    Raises:
        ValueError: g is not constant on some block
    """
    factored = []
    for block in witness.partition:
        values = {mapping[x] for x in block}
        if len(values) != 1:
            raise ValueError(f"Map {list(mapping)} is not constant on block {list(block)}")
        factored.append(values.pop())
    return tuple(factored)
