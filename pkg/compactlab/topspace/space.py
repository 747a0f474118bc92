"""
Finite Topological Spaces

A finite space is a FiniteTopology on points 0..n-1. Finite topologies correspond exactly to
preorders: x <= y (x lies in the closure of y) iff every open set containing x contains y, and
the open sets are the up-sets of the preorder.

Space files:

    {"points": 3, "opens": [[], [2], [0, 1, 2]]}
    {"preorder": [[0, 1], [1, 1]]}
"""

import json
import logging
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import networkx as nx

from compactlab.errors import ParseError
from compactlab.spectrum.topology import FiniteTopology, point_mask

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteSpace:
    """A finite topological space."""

    topology: FiniteTopology

    @property
    def size(self) -> int:
        return self.topology.size

    @property
    def opens(self) -> frozenset[int]:
        return self.topology.opens

    @classmethod
    def from_preorder(cls, size: int, pairs: Iterable[tuple[int, int]]) -> "FiniteSpace":
        """
        Space whose specialization preorder is the reflexive-transitive closure of ``pairs``.

        Args:
            size: Number of points
            pairs: (x, y) meaning x <= y, i.e. x lies in the closure of y
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(range(size))
        graph.add_edges_from(pairs)
        closure = nx.transitive_closure(graph, reflexive=True)
        neighbourhoods = [point_mask(closure.successors(x)) for x in range(size)]
        return cls(FiniteTopology.from_neighbourhoods(size, neighbourhoods))

    @classmethod
    def from_opens(cls, size: int, opens: Iterable[Iterable[int]]) -> "FiniteSpace":
        return cls(FiniteTopology.from_opens(size, (point_mask(u) for u in opens)))

    @classmethod
    def discrete(cls, size: int) -> "FiniteSpace":
        return cls(FiniteTopology.discrete(size))

    @classmethod
    def indiscrete(cls, size: int) -> "FiniteSpace":
        return cls(FiniteTopology.indiscrete(size))

    @classmethod
    def sierpinski(cls) -> "FiniteSpace":
        """Opens {}, {1}, {0, 1}: the point 1 is open and 0 lies in its closure."""
        return cls.from_opens(2, [[], [1], [0, 1]])

    def preorder(self) -> frozenset[tuple[int, int]]:
        """All (x, y) with x <= y."""
        return frozenset(
            (x, y)
            for x, nbhd in enumerate(self.topology.minimal_neighbourhoods)
            for y in range(self.size)
            if (nbhd >> y) & 1
        )

    def closure_of_point(self, y: int) -> int:
        return self.topology.closure(1 << y)

    def components(self) -> list[tuple[int, ...]]:
        return self.topology.components()

    def disjoint_union(self, other: "FiniteSpace") -> "FiniteSpace":
        shift = self.size
        opens = {u | (v << shift) for u in self.opens for v in other.opens}
        return FiniteSpace(FiniteTopology(self.size + other.size, frozenset(opens)))

    def describe(self) -> dict[str, Any]:
        return {"points": self.size, "opens": self.topology.sorted_opens()}

    def __repr__(self) -> str:
        return f"FiniteSpace(points={self.size}, opens={self.topology.sorted_opens()})"


def _point_list(value: Any, size: int, where: str) -> list[int]:
    if not isinstance(value, list) or any(
        not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < size for p in value
    ):
        raise ParseError(f"Expected a list of points in [0, {size})", field=where)
    return value


def space_from_description(data: Any) -> FiniteSpace:
    """
    Build a space from ``{"points", "opens"}`` or ``{"preorder"}`` (optionally with
    ``"points"``).

    Raises:
        ParseError: Missing or malformed fields, or opens that are not a topology
    """
    if not isinstance(data, dict):
        raise ParseError("Space description must be an object")
    if "opens" in data:
        size = data.get("points")
        if not isinstance(size, int) or isinstance(size, bool) or size < 0:
            raise ParseError(f"Expected a point count, got {size!r}", field="points")
        opens = data["opens"]
        if not isinstance(opens, list):
            raise ParseError("Expected a list of open sets", field="opens")
        masks = [point_mask(_point_list(u, size, f"opens[{i}]")) for i, u in enumerate(opens)]
        try:
            return FiniteSpace(FiniteTopology.from_opens(size, masks))
        except ValueError as e:
            raise ParseError(str(e), field="opens") from e
    if "preorder" in data:
        pairs = data["preorder"]
        if not isinstance(pairs, list) or any(
            not isinstance(pair, list) or len(pair) != 2 for pair in pairs
        ):
            raise ParseError("Expected a list of [x, y] pairs", field="preorder")
        if any(not isinstance(p, int) or isinstance(p, bool) or p < 0 for pair in pairs for p in pair):
            raise ParseError("Preorder entries must be point indices", field="preorder")
        inferred = 1 + max((max(pair) for pair in pairs), default=-1)
        size = data.get("points", inferred)
        if not isinstance(size, int) or isinstance(size, bool) or size < inferred:
            raise ParseError(f"Point count must cover every listed point, got {size!r}", field="points")
        for i, pair in enumerate(pairs):
            _point_list(pair, size, f"preorder[{i}]")
        return FiniteSpace.from_preorder(size, [(x, y) for x, y in pairs])
    raise ParseError("Expected an 'opens' or 'preorder' key", field="opens")


def parse_space(text: str) -> FiniteSpace:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e.msg}", line=e.lineno) from e
    return space_from_description(data)


def load_space(path: str | Path) -> FiniteSpace:
    logger.debug(f"Loading space description from {path}")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read space file {path}: {e.strerror}") from e
    return parse_space(text)
