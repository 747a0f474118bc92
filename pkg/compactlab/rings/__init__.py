"""
Ring Kernel Package

Exact finite commutative rings and their ideals:
- FiniteRing backends: ProductRing (products of local atoms Z/p^k or of other finite rings)
  and TableRing (explicit Cayley tables)
- Ideal and MultSet closures, quotients and localizations with their canonical maps
- Radicals, annihilators, units, idempotents and ring classification predicates
"""

from compactlab.rings.atoms import AtomRing, LocalAtom
from compactlab.rings.axioms import check_ring_axioms
from compactlab.rings.base import FiniteRing
from compactlab.rings.constructions import (
    Localization,
    RingMap,
    brute_force_nilpotent_products,
    localize,
    localize_at_prime,
    quotient,
)
from compactlab.rings.corpus import CorpusRing, ring_corpus
from compactlab.rings.description import dump_ring, load_ring, parse_ring, ring_from_description
from compactlab.rings.ideals import (
    Ideal,
    MultSet,
    enumerate_mult_sets,
    ideal_generate,
    ideal_intersection,
    ideal_sum,
    is_ideal,
    principal_ideal,
)
from compactlab.rings.product import ProductRing, product, product_of_rings
from compactlab.rings.structure import (
    annihilator,
    annihilator_idempotent,
    idempotents,
    is_absolutely_flat,
    is_absolutely_flat_mod_jacobson,
    is_domain,
    is_field,
    is_local,
    is_reduced,
    jacobson_radical,
    nilradical,
    regular_witness,
    units,
)
from compactlab.rings.table import TableRing, cyclic

__all__ = [
    "FiniteRing",
    "LocalAtom",
    "AtomRing",
    "ProductRing",
    "TableRing",
    "product",
    "product_of_rings",
    "cyclic",
    "Ideal",
    "MultSet",
    "enumerate_mult_sets",
    "ideal_generate",
    "ideal_sum",
    "ideal_intersection",
    "is_ideal",
    "principal_ideal",
    "RingMap",
    "Localization",
    "quotient",
    "localize",
    "localize_at_prime",
    "brute_force_nilpotent_products",
    "units",
    "idempotents",
    "nilradical",
    "jacobson_radical",
    "annihilator",
    "annihilator_idempotent",
    "regular_witness",
    "is_field",
    "is_domain",
    "is_local",
    "is_reduced",
    "is_absolutely_flat",
    "is_absolutely_flat_mod_jacobson",
    "check_ring_axioms",
    "CorpusRing",
    "ring_corpus",
    "parse_ring",
    "load_ring",
    "dump_ring",
    "ring_from_description",
]
