"""
Ring Maps Between Finite Power Set Rings

Unital ring maps P(X) -> P(Y) are enumerated exhaustively: every assignment of images to the
singletons is extended additively (the singletons are an F2-basis) and kept when the result
is a ring homomorphism. Each surviving map sends y to the unique x whose singleton image
contains y, giving the matching set map Y -> X.
"""

import itertools
import logging
from dataclasses import dataclass

from compactlab.boolring.finsubset import power_set_ring, subset_elements
from compactlab.config import settings
from compactlab.errors import CapacityError, ConsistencyError
from compactlab.rings.constructions import RingMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RingMapCount:
    """
    Args:
        source_size: |X|
        target_size: |Y|
        count: Number of unital ring maps P(X) -> P(Y)
        set_maps: The induced maps Y -> X, as tuples indexed by y
    """

    source_size: int
    target_size: int
    count: int
    set_maps: tuple[tuple[int, ...], ...]

    @property
    def expected(self) -> int:
        return self.source_size**self.target_size


def count_ring_maps(source_size: int, target_size: int) -> RingMapCount:
    """
    Count ring maps P(X) -> P(Y) for |X| = source_size, |Y| = target_size.

    Raises:
        CapacityError: Either universe exceeds RING_MAP_UNIVERSE_CAP
        ConsistencyError: A ring map does not come from a set map
    """
    cap = settings.RING_MAP_UNIVERSE_CAP
    for size in (source_size, target_size):
        if size > cap:
            raise CapacityError("ring map universe size", cap, size)
    source = power_set_ring(source_size)
    target = power_set_ring(target_size)
    source_chi = subset_elements(source)
    target_chi = subset_elements(target)

    homs: list[tuple[int, ...]] = []
    for singleton_images in itertools.product(range(1 << target_size), repeat=source_size):
        images = [0] * source.order
        for bits in range(1 << source_size):
            image_bits = 0
            for x in range(source_size):
                if (bits >> x) & 1:
                    image_bits ^= singleton_images[x]
            images[int(source_chi[bits])] = int(target_chi[image_bits])
        if RingMap(source, target, tuple(images)).is_ring_homomorphism():
            homs.append(singleton_images)

    set_maps = []
    for singleton_images in homs:
        owners = []
        for y in range(target_size):
            holders = [x for x in range(source_size) if (singleton_images[x] >> y) & 1]
            if len(holders) != 1:
                raise ConsistencyError(f"Point {y} lies in {len(holders)} singleton images")
            owners.append(holders[0])
        set_maps.append(tuple(owners))
    logger.debug(f"{len(homs)} ring maps P({source_size}) -> P({target_size})")
    return RingMapCount(source_size, target_size, len(homs), tuple(sorted(set_maps)))
