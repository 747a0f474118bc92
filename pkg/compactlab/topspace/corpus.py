"""
Finite Space Corpus

Every topology on n labeled points, obtained from the preorders on n points: all reflexive
relations are scanned and the transitive ones kept (R is transitive iff R*R lies inside R as
boolean matrices).
"""

import logging

import numpy as np

from compactlab.config import settings
from compactlab.errors import CapacityError
from compactlab.spectrum.topology import FiniteTopology, point_mask
from compactlab.topspace.space import FiniteSpace

logger = logging.getLogger(__name__)


def enumerate_spaces(size: int, cap: int | None = None) -> list[FiniteSpace]:
    """
    All topologies on ``size`` labeled points, ordered by their sorted open families.

    Args:
        size: Number of points
        cap: Point cap (defaults to SPACE_POINT_CAP)

    Raises:
        CapacityError: size exceeds the cap
    """
    limit = settings.SPACE_POINT_CAP if cap is None else cap
    if size > limit:
        raise CapacityError("space point count", limit, size)
    off_diagonal = [(x, y) for x in range(size) for y in range(size) if x != y]
    spaces = []
    for choice in range(1 << len(off_diagonal)):
        relation = np.eye(size, dtype=np.int64)
        for bit, (x, y) in enumerate(off_diagonal):
            if (choice >> bit) & 1:
                relation[x, y] = 1
        if ((relation @ relation > 0) & (relation == 0)).any():
            continue
        neighbourhoods = [point_mask(np.flatnonzero(row).tolist()) for row in relation]
        spaces.append(FiniteSpace(FiniteTopology.from_neighbourhoods(size, neighbourhoods)))
    spaces.sort(key=lambda space: space.topology.sorted_opens())
    logger.debug(f"{len(spaces)} topologies on {size} points")
    return spaces
