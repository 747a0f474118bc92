"""
Zariski Convergence on Finite Spaces

For a finite space X every maximal ideal of P(X) is some m_y, and m_y converges to x when
m_y lies in D(U) for every open U containing x, i.e. when y lies in every open neighbourhood
of x. Openness and continuity are decided twice: through convergence and directly from the
open sets; the two answers must agree.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from compactlab.errors import ConsistencyError
from compactlab.spectrum.topology import point_mask
from compactlab.topspace.space import FiniteSpace

logger = logging.getLogger(__name__)

PointMap = Sequence[int]


@dataclass(frozen=True)
class ConvergenceRelation:
    """
    Args:
        size: Number of points
        pairs: (y, x) meaning m_y converges to x
    """

    size: int
    pairs: frozenset[tuple[int, int]]

    def converges(self, y: int, x: int) -> bool:
        return (y, x) in self.pairs

    def limits_of(self, y: int) -> list[int]:
        return [x for x in range(self.size) if (y, x) in self.pairs]

    def sorted_pairs(self) -> list[list[int]]:
        return [list(pair) for pair in sorted(self.pairs)]


@lru_cache(maxsize=1024)
def convergence_relation(space: FiniteSpace) -> ConvergenceRelation:
    """Pairs (y, x) such that every open set containing x contains y."""
    pairs = set()
    for x in range(space.size):
        for y in range(space.size):
            if all((u >> y) & 1 for u in space.opens if (u >> x) & 1):
                pairs.add((y, x))
    return ConvergenceRelation(space.size, frozenset(pairs))


def converges(space: FiniteSpace, y: int, x: int) -> bool:
    """
    Whether m_y converges to x.

    Raises:
        ConsistencyError: The literal definition disagrees with x in cl{y}
    """
    literal = convergence_relation(space).converges(y, x)
    if literal != bool((space.closure_of_point(y) >> x) & 1):
        raise ConsistencyError(f"Convergence of m_{y} to {x} disagrees with the closure of {y}")
    return literal


def open_via_convergence(
    space: FiniteSpace, subset: int, relation: ConvergenceRelation | None = None
) -> bool:
    """
    A is open iff every m_y converging to a point of A has y in A.

    Raises:
        ConsistencyError: The criterion disagrees with membership in the open family
    """
    relation = relation or convergence_relation(space)
    criterion = all(
        (subset >> y) & 1 for (y, x) in relation.pairs if (subset >> x) & 1
    )
    if criterion != space.topology.is_open(subset):
        raise ConsistencyError(f"Convergence criterion misjudges openness of {subset:b}")
    return criterion


def preimage(mapping: PointMap, subset: int) -> int:
    return point_mask(y for y, image in enumerate(mapping) if (subset >> image) & 1)


def is_continuous(mapping: PointMap, source: FiniteSpace, target: FiniteSpace) -> bool:
    """Preimage of every open set is open."""
    _check_map(mapping, source, target)
    return all(source.topology.is_open(preimage(mapping, v)) for v in target.opens)


def pushforward_point(mapping: PointMap, target_size: int, y: int) -> int:
    """
    P(f)_*(m_y) = {B : f^-1(B) in m_y}, computed over every subset B of the target and
    identified with the principal ideal m_z it equals.

    Raises:
        ConsistencyError: The pushforward is not a principal maximal ideal
    """
    members = {b for b in range(1 << target_size) if not (preimage(mapping, b) >> y) & 1}
    for z in range(target_size):
        if members == {b for b in range(1 << target_size) if not (b >> z) & 1}:
            return z
    raise ConsistencyError(f"Pushforward of m_{y} is not principal")


def continuous_via_convergence(
    mapping: PointMap, source: FiniteSpace, target: FiniteSpace
) -> bool:
    """
    f is continuous iff m_y -> x implies P(f)_*(m_y) -> f(x).

    Raises:
        ConsistencyError: The criterion disagrees with the preimage test
    """
    _check_map(mapping, source, target)
    source_relation = convergence_relation(source)
    target_relation = convergence_relation(target)
    pushed = [pushforward_point(mapping, target.size, y) for y in range(source.size)]
    criterion = all(
        target_relation.converges(pushed[y], mapping[x]) for (y, x) in source_relation.pairs
    )
    if criterion != is_continuous(mapping, source, target):
        raise ConsistencyError(f"Convergence criterion misjudges continuity of {list(mapping)}")
    return criterion


def _check_map(mapping: PointMap, source: FiniteSpace, target: FiniteSpace) -> None:
    if len(mapping) != source.size or any(not 0 <= image < target.size for image in mapping):
        raise ValueError(
            f"Map {list(mapping)} is not a function from {source.size} to {target.size} points"
        )
