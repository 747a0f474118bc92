"""
Ring Corpus

The exhaustive family of small rings the verification suites sweep: every product of at most
four local atoms up to a given order, a handful of table rings that are not products of atoms
(Z/n presented directly, F4, dual numbers, a square-zero extension, a Galois ring), and
optionally seeded random relabelings of product rings as table rings.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from sympy import primerange

from compactlab.config import settings
from compactlab.rings.atoms import LocalAtom
from compactlab.rings.base import FiniteRing
from compactlab.rings.product import ProductRing, product
from compactlab.rings.table import (
    TableRing,
    cyclic,
    dual_numbers,
    galois_field_four,
    galois_ring_four_squared,
    square_zero_plane,
)

logger = logging.getLogger(__name__)

MAX_CORPUS_FACTORS = 4


@dataclass(frozen=True)
class CorpusRing:
    name: str
    ring: FiniteRing = field(repr=False, compare=False)


def local_atoms(max_order: int) -> list[LocalAtom]:
    atoms = []
    for p in primerange(2, max_order + 1):
        k = 1
        while p**k <= max_order:
            atoms.append(LocalAtom(int(p), k))
            k += 1
    return sorted(atoms, key=lambda atom: (atom.modulus, atom.prime))


def atom_products(max_order: int, max_factors: int = MAX_CORPUS_FACTORS) -> list[CorpusRing]:
    """Every product of 1..max_factors atoms (as a multiset) with order <= max_order."""
    atoms = local_atoms(max_order)
    results: list[CorpusRing] = []

    def extend(chosen: list[LocalAtom], start: int, order: int) -> None:
        if chosen:
            labels = [chr(ord("a") + i) for i in range(len(chosen))]
            name = " x ".join(str(atom) for atom in chosen)
            results.append(CorpusRing(name, product(chosen, labels)))
        if len(chosen) == max_factors:
            return
        for i in range(start, len(atoms)):
            if order * atoms[i].modulus > max_order:
                break
            extend([*chosen, atoms[i]], i, order * atoms[i].modulus)

    extend([], 0, 1)
    results.sort(key=lambda entry: (entry.ring.order, entry.name))
    return results


def table_rings(max_order: int) -> list[CorpusRing]:
    candidates = [
        ("Z/6 (table)", 6, lambda: cyclic(6)),
        ("F4", 4, galois_field_four),
        ("Z/2[e]/(e^2)", 4, lambda: dual_numbers(2)),
        ("F2[x,y]/(x,y)^2", 8, square_zero_plane),
        ("Z/3[e]/(e^2)", 9, lambda: dual_numbers(3)),
        ("Z/12 (table)", 12, lambda: cyclic(12)),
        ("Z/4[t]/(t^2+t+1)", 16, galois_ring_four_squared),
        ("Z/24 (table)", 24, lambda: cyclic(24)),
    ]
    return [CorpusRing(name, build()) for name, order, build in candidates if order <= max_order]


def relabeled_rings(
    source: list[CorpusRing], count: int, seed: int
) -> list[CorpusRing]:
    """Seeded random relabelings of product rings as table rings."""
    if count <= 0:
        return []
    pool = [
        entry
        for entry in source
        if isinstance(entry.ring, ProductRing) and entry.ring.order <= settings.TABLE_RING_CAP
    ]
    if not pool:
        return []
    rng = np.random.default_rng(seed)
    results = []
    for i in range(count):
        entry = pool[int(rng.integers(len(pool)))]
        permutation = rng.permutation(entry.ring.order)
        results.append(
            CorpusRing(f"relabel#{i}({entry.name})", TableRing.from_ring(entry.ring, permutation))
        )
    return results


def ring_corpus(max_order: int, augment: int = 0, seed: int = 0) -> list[CorpusRing]:
    """
    The sweep corpus for rings of order <= max_order.

    Args:
        max_order: Largest ring order included
        augment: Number of seeded random table relabelings to add (off by default)
        seed: Seed for the relabelings

    Returns:
        Corpus entries in a deterministic order
    """
    corpus = atom_products(max_order) + table_rings(max_order)
    corpus += relabeled_rings(corpus, augment, seed)
    logger.debug(f"Ring corpus up to order {max_order}: {len(corpus)} rings")
    return corpus
