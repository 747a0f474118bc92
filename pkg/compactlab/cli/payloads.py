"""
Verb Payloads

Turns computed objects into plain dictionaries for the emitters. Graphs are assembled with
networkx and flattened to sorted node and edge lists, so the output does not depend on
insertion order.
"""

from typing import Any

import networkx as nx

from compactlab.boolring.upset import UPSet
from compactlab.rings.base import FiniteRing
from compactlab.rings.constructions import Localization, RingMap
from compactlab.rings.ideals import Ideal
from compactlab.spectrum.enumeration import SpecSite
from compactlab.spectrum.topology import FiniteTopology, compare, flat_topology, zariski_topology
from compactlab.stone.compactification import Compactification
from compactlab.stone.finite import FiniteBooleanSpectrum, ultrafilter_view
from compactlab.topspace.beta import QuotientWitness, clop_ring, pi0_spec_check
from compactlab.topspace.convergence import convergence_relation, open_via_convergence
from compactlab.topspace.space import FiniteSpace
from compactlab.ultra.ideals import Ultraproduct


def _label(ring: FiniteRing, a: int) -> Any:
    label = ring.element_label(a)
    return list(label) if isinstance(label, tuple) else label


def ideal_payload(ideal: Ideal) -> dict[str, Any]:
    return {
        "members": [_label(ideal.ring, a) for a in ideal.members],
        "generators": [_label(ideal.ring, g) for g in ideal.generators],
        "size": ideal.size,
    }


def table_payload(ring: FiniteRing) -> dict[str, Any]:
    add, mul = ring.full_tables()
    return {
        "order": ring.order,
        "zero": ring.zero,
        "one": ring.one,
        "add": add.tolist(),
        "mul": mul.tolist(),
    }


def graph_from(name: str, topology: FiniteTopology, labels: list[str]) -> dict[str, Any]:
    """Specialization edges x -> y for x != y with y in every open containing x."""
    graph = topology.specialization_graph()
    graph.remove_edges_from(nx.selfloop_edges(graph))
    return {
        "name": name,
        "directed": True,
        "nodes": [{"id": labels[x], "label": labels[x]} for x in graph.nodes],
        "edges": [[labels[u], labels[v]] for u, v in graph.edges],
    }


def topology_payload(topology: FiniteTopology) -> dict[str, Any]:
    return {"points": topology.size, "opens": topology.sorted_opens()}


def ring_spec_payload(ring: FiniteRing, site: SpecSite) -> dict[str, Any]:
    return {
        "ring": ring.describe(),
        "order": ring.order,
        "site": str(site.kind),
        "points": [ideal_payload(point) for point in site.points],
    }


def ring_topology_payload(ring: FiniteRing, site: SpecSite) -> dict[str, Any]:
    zariski, flat = zariski_topology(site), flat_topology(site)
    labels = [f"P{i}" for i in range(len(site))]
    return {
        "ring": ring.describe(),
        "site": str(site.kind),
        "zariski": topology_payload(zariski),
        "flat": topology_payload(flat),
        "zariski_vs_flat": str(compare(zariski, flat)),
        "graph": graph_from(f"{site.kind} zariski", zariski, labels),
    }


def localization_payload(ring: FiniteRing, localization: Localization) -> dict[str, Any]:
    return {
        "ring": ring.describe(),
        "mult_set": [_label(ring, s) for s in localization.mult_set.members],
        "order": localization.ring.order,
        "fractions": [[_label(ring, r), _label(ring, s)] for r, s in localization.fractions],
        "canonical": list(localization.canonical.images),
        "kernel": ideal_payload(localization.kernel()),
        "radical_kernel": ideal_payload(localization.radical_kernel()),
        "tables": table_payload(localization.ring),
    }


def _map_payload(ring_map: RingMap) -> dict[str, Any]:
    return {
        "images": list(ring_map.images),
        "bijective": ring_map.is_bijective(),
        "homomorphism": ring_map.is_ring_homomorphism(),
    }


def ultra_payload(label: str, result: Ultraproduct) -> dict[str, Any]:
    ring = result.ultra.ideal.ring
    return {
        "ring": ring.describe(),
        "at": label,
        "kind": str(result.ultra.kind),
        "ideal": ideal_payload(result.ultra.ideal),
        "quotient": table_payload(result.ring),
        "projection": list(result.projection.images),
        "comparison": _map_payload(result.comparison),
        "classification": result.classify(),
    }


def stone_spec_payload(spectrum: FiniteBooleanSpectrum) -> dict[str, Any]:
    labels = [f"m{x}" for x in range(spectrum.universe_size)]
    points = []
    for x, point in enumerate(spectrum.points):
        view = ultrafilter_view(point)
        points.append(
            {
                "principal_at": x,
                "ideal": sorted(point.members),
                "ultrafilter": sorted(view.members),
            }
        )
    return {
        "universe": spectrum.universe_size,
        "points": points,
        "topology": topology_payload(spectrum.topology),
        "discrete": spectrum.is_discrete,
        "graph": graph_from("Spec P(X)", spectrum.topology, labels),
    }


def compactification_payload(
    compactification: Compactification, points: int
) -> dict[str, Any]:
    """
    Principal points 0..points-1 and every point at infinity; each principal point is joined
    to the infinity point of the atom it lies in.
    """
    graph = nx.Graph()
    infinity_ids = [f"inf{i}" for i in range(len(compactification.infinity))]
    for i, point in enumerate(compactification.infinity):
        graph.add_node(infinity_ids[i], label=str(point), infinity=True)
    for x in range(points):
        graph.add_node(str(x), label=str(x), infinity=False)
        for i, point in enumerate(compactification.infinity):
            if x in point.atom:
                graph.add_edge(str(x), infinity_ids[i])
    return {
        "compactification": compactification.describe(),
        "graph": {
            "name": compactification.ring.describe(),
            "directed": False,
            "nodes": [{"id": n, **data} for n, data in graph.nodes(data=True)],
            "edges": [sorted([u, v]) for u, v in graph.edges],
        },
    }


def probe_payload(compactification: Compactification, probe: UPSet) -> dict[str, Any]:
    """Membership of a probe set in the ring and the points of its basic open."""
    member = compactification.ring.contains(probe)
    data: dict[str, Any] = {"probe": str(probe), "in_ring": member}
    if not member:
        return data
    open_set = compactification.basic_open(probe)
    data["naturals"] = probe.to_dict()
    data["first_natural"] = probe.first()
    data["infinity"] = [str(compactification.infinity[i]) for i in sorted(open_set.infinity)]
    return data


def beta_payload(space: FiniteSpace, witness: QuotientWitness) -> dict[str, Any]:
    labels = [str(x) for x in range(space.size)]
    return {
        "space": space.describe(),
        **witness.to_dict(),
        "graph": graph_from("specialization", space.topology, labels),
    }


def space_check_payload(space: FiniteSpace) -> dict[str, Any]:
    relation = convergence_relation(space)
    open_subsets = [
        subset for subset in range(1 << space.size) if open_via_convergence(space, subset, relation)
    ]
    clop = clop_ring(space)
    return {
        "space": space.describe(),
        "convergence": relation.sorted_pairs(),
        "open_via_convergence": [
            [x for x in range(space.size) if (subset >> x) & 1] for subset in open_subsets
        ],
        "components": [list(block) for block in space.components()],
        "clopens": len(clop.sets),
        "pi0_spec": pi0_spec_check(space),
        "graph": graph_from("specialization", space.topology, [str(x) for x in range(space.size)]),
    }
