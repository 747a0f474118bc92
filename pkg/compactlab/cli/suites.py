"""
Verification Suites

Each suite checks one family of statements exhaustively over a bounded corpus of rings,
spaces or periodic sets and appends one record per instance to its SuiteResult. Suites are
independent of one another; run_suites fans them out over worker threads with
asyncio.gather and collects the results in id order, or runs them one after another when
parallel execution is switched off.

A ConsistencyError raised inside a check is a counterexample, never a crash: it becomes a
failing record carrying the instance that produced it.
"""

import asyncio
import itertools
import logging
import time
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, TypeVar

import numpy as np
from sympy import factorint

from compactlab.boolring.finsubset import (
    characteristic_isomorphism_holds,
    element_to_subset,
    power_set_ring,
    union_and_downward_closed,
)
from compactlab.boolring.rings import atom_decompose, same_ring
from compactlab.boolring.upset import UPSet, agrees_with_oracle, canonicalize
from compactlab.cli.report import Report, Reproducible, SuiteResult
from compactlab.config import settings
from compactlab.errors import ConsistencyError
from compactlab.rings.atoms import LocalAtom
from compactlab.rings.axioms import check_ring_axioms
from compactlab.rings.base import FiniteRing, IndexArray
from compactlab.rings.constructions import brute_force_nilpotent_products, localize
from compactlab.rings.corpus import CorpusRing, ring_corpus
from compactlab.rings.ideals import MultSet, enumerate_mult_sets, is_ideal
from compactlab.rings.product import ProductRing, product
from compactlab.rings.structure import (
    annihilator_idempotent,
    is_absolutely_flat,
    is_absolutely_flat_mod_jacobson,
    is_domain,
    is_field,
    is_local,
    is_reduced,
    jacobson_radical,
    nilradical,
    regular_witness,
)
from compactlab.spectrum.enumeration import (
    enumerate_ideals,
    is_prime,
    jacobson_from_maximals,
    max_ideals,
    min_primes,
    nilradical_from_primes,
)
from compactlab.spectrum.topology import (
    Comparison,
    clopens,
    closed_basic_family,
    compare,
    flat_topology,
    zariski_topology,
)
from compactlab.stone.compactification import (
    Compactification,
    alexandroff,
    check_cover,
    clop_of_compactification,
    compactify,
    maximality_witness,
)
from compactlab.stone.finite import (
    all_principal_ultrafilters,
    basic_opens_correspond,
    brute_force_maximal_ideals,
    principal_members,
    spec_finite_boolean,
)
from compactlab.stone.homs import count_ring_maps
from compactlab.stone.points import InfinityPoint, PrincipalPoint, ideal_law_violations
from compactlab.topspace.beta import beta, beta_is_extremal, injective_when_dense, pi0_spec_check
from compactlab.topspace.convergence import (
    continuous_via_convergence,
    convergence_relation,
    converges,
    open_via_convergence,
)
from compactlab.topspace.corpus import enumerate_spaces
from compactlab.topspace.space import FiniteSpace
from compactlab.ultra.homeomorphisms import (
    composite_sends_kernels_to_maximals,
    delta_isolates,
    flat_homeomorphism,
    star_homeomorphism,
)
from compactlab.ultra.ideals import PrincipalMax, UltraKind, residue_field_comparison, ultraproduct
from compactlab.ultra.support import support_bits, support_preimage, unit_locus_preimage
from compactlab.ultra.three_spaces import three_spaces
from compactlab.ultra.universal import all_maps_factor

logger = logging.getLogger(__name__)

T = TypeVar("T")

# Moduli of the factors; prefixes of length 1..4 are swept
FIELD_FAMILIES = ((2, 2, 2, 2), (2, 3, 5, 7), (3, 3, 2, 5))
LOCAL_FAMILIES = ((4, 4, 4, 4), (4, 9, 2, 3), (8, 9, 5, 2))

KNOWN_TOPOLOGY_COUNTS = {1: 1, 2: 4, 3: 29, 4: 355}
CONTINUITY_SWEEP_POINTS = 3
PERIODIC_SAMPLES = 200
ALEXANDROFF_SAMPLE_POINTS = 8


@dataclass(frozen=True)
class SuiteContext:
    """
    Args:
        max_ring: Largest corpus ring order
        max_space: Largest finite space size
        seed: Seed for every sampled instance
        augment: Seeded random table relabelings added to the ring corpus
    """

    max_ring: int
    max_space: int
    seed: int
    augment: int = 0

    @classmethod
    def from_settings(cls, augment: int = 0) -> "SuiteContext":
        return cls(
            settings.ENUMERATION_RING_CAP, settings.SPACE_POINT_CAP, settings.DEFAULT_SEED, augment
        )

    def corpus(self, max_order: int | None = None) -> list[CorpusRing]:
        limit = self.max_ring if max_order is None else min(self.max_ring, max_order)
        return _corpus(limit, self.augment, self.seed)


@lru_cache(maxsize=16)
def _corpus(max_order: int, augment: int, seed: int) -> list[CorpusRing]:
    return ring_corpus(max_order, augment, seed)


def _sweep(
    result: SuiteResult,
    check: str,
    instance: str,
    items: Iterable[T],
    predicate: Callable[[T], bool],
    describe: Callable[[T], Any] = lambda item: item,
    source: Callable[[T], Reproducible] = lambda item: None,
) -> None:
    """One record for ``predicate`` over every item, stopping at the first counterexample."""
    count = 0
    for item in items:
        count += 1
        try:
            holds = predicate(item)
            error = None
        except ConsistencyError as e:
            holds, error = False, str(e)
        if not holds:
            witness: dict[str, Any] = {"counterexample": describe(item)}
            if error:
                witness["consistency"] = error
            result.add(check, instance, False, witness, source(item))
            return
    result.add(check, instance, True, {"instances": count})


def _atom(modulus: int) -> LocalAtom:
    [(prime, exponent)] = factorint(modulus).items()
    return LocalAtom(int(prime), int(exponent))


def _family_ring(moduli: Sequence[int]) -> ProductRing:
    return product([_atom(q) for q in moduli], [chr(ord("a") + i) for i in range(len(moduli))])


def _family_name(moduli: Sequence[int]) -> str:
    return " x ".join(f"Z/{q}" for q in moduli)


def _fields_only(ring: FiniteRing) -> bool:
    return isinstance(ring, ProductRing) and all(is_field(f) for f in ring.factors)


# Ring suites


def ring_axioms(ctx: SuiteContext, result: SuiteResult) -> None:
    for entry in ctx.corpus():
        ring = entry.ring
        violations = check_ring_axioms(ring)
        result.add("ring laws", entry.name, not violations, violations or ring.order, ring)
        with result.guarded("radicals from spectra", entry.name, ring):
            jacobson = jacobson_radical(ring).mask == jacobson_from_maximals(ring).mask
            nil = nilradical(ring).mask == nilradical_from_primes(ring).mask
            result.add(
                "radicals from spectra",
                entry.name,
                jacobson and nil,
                {"jacobson": jacobson, "nilradical": nil},
                ring,
            )
        flat = is_absolutely_flat(ring)
        result.add(
            "absolutely flat iff reduced",
            entry.name,
            flat == is_reduced(ring),
            {"absolutely_flat": flat},
            ring,
        )
        if _fields_only(ring):
            _sweep(
                result,
                "f = f^2 g with idempotent annihilator",
                entry.name,
                range(ring.order),
                lambda f, ring=ring: _regular(ring, f),
                lambda f, ring=ring: ring.element_label(f),
                lambda f, ring=ring: ring,
            )


def _regular(ring: ProductRing, f: int) -> bool:
    g = regular_witness(ring, f)
    e = annihilator_idempotent(ring, f)
    return ring.mul(ring.mul(f, f), g) == f and ring.mul(e, e) == e


def _torsion_flags(ring: FiniteRing, members: IndexArray) -> np.ndarray:
    return (ring.mul_many(members[:, None], ring.elements()[None, :]) == ring.zero).any(axis=0)


LOCALIZATION_CHECKS = ("kernel = nilpotent products", "literal kernel = S-torsion")


def _localization_outcomes(ring: FiniteRing, mult_set: MultSet) -> tuple[bool, bool]:
    """Both kernel descriptions, read off a single localization."""
    localization = localize(ring, mult_set)
    brute_force = brute_force_nilpotent_products(ring, mult_set)
    radical = localization.radical_kernel().mask == brute_force.mask
    literal = bool((localization.kernel().flags == _torsion_flags(ring, mult_set.indices)).all())
    return radical, literal


def localization_kernel(ctx: SuiteContext, result: SuiteResult) -> None:
    max_order = settings.get_suite_config("localization-kernel").get(
        "max_order", settings.LOCALIZATION_SWEEP_ORDER
    )
    for entry in ctx.corpus(max_order):
        ring = entry.ring
        mult_sets = enumerate_mult_sets(ring)
        counterexamples: dict[str, dict[str, Any]] = {}
        for mult_set in mult_sets:
            try:
                outcomes = _localization_outcomes(ring, mult_set)
                error = None
            except ConsistencyError as e:
                outcomes, error = (False, False), str(e)
            for check, holds in zip(LOCALIZATION_CHECKS, outcomes):
                if not holds and check not in counterexamples:
                    witness: dict[str, Any] = {
                        "counterexample": [ring.element_label(a) for a in mult_set.members]
                    }
                    if error:
                        witness["consistency"] = error
                    counterexamples[check] = witness
            if len(counterexamples) == len(LOCALIZATION_CHECKS):
                break
        for check in LOCALIZATION_CHECKS:
            if check in counterexamples:
                result.add(check, entry.name, False, counterexamples[check], ring)
            else:
                result.add(check, entry.name, True, {"instances": len(mult_sets)})


def minimal_primes(ctx: SuiteContext, result: SuiteResult) -> None:
    for entry in ctx.corpus():
        with result.guarded("minimal primes criteria agree", entry.name, entry.ring):
            site = min_primes(entry.ring)
            result.add("minimal primes criteria agree", entry.name, True, len(site))


def min_max_topologies(ctx: SuiteContext, result: SuiteResult) -> None:
    for entry in ctx.corpus():
        ring, name = entry.ring, entry.name
        with result.guarded("min/max topologies", name, ring):
            min_site, max_site = min_primes(ring), max_ideals(ring)
            on_min = compare(zariski_topology(min_site), flat_topology(min_site))
            result.add(
                "zariski finer than flat on Min",
                name,
                on_min in (Comparison.EQUAL, Comparison.FINER),
                str(on_min),
                ring,
            )
            zariski, flat = zariski_topology(max_site), flat_topology(max_site)
            regular = is_absolutely_flat_mod_jacobson(ring)
            equal = compare(zariski, flat) is Comparison.EQUAL
            result.add(
                "zariski = flat on Max iff R/J absolutely flat",
                name,
                equal == regular,
                {"equal": equal, "absolutely_flat_mod_jacobson": regular},
                ring,
            )
            flat_vs_zariski = compare(flat, zariski)
            result.add(
                "flat finer than zariski on Max",
                name,
                flat_vs_zariski in (Comparison.EQUAL, Comparison.FINER),
                str(flat_vs_zariski),
                ring,
            )
            if regular:
                result.add(
                    "clopens of Max are the V(f)",
                    name,
                    clopens(zariski) == frozenset(closed_basic_family(max_site)),
                    len(clopens(zariski)),
                    ring,
                )


def boolean_spectrum(ctx: SuiteContext, result: SuiteResult) -> None:
    for size in range(1, settings.BOOLEAN_UNIVERSE_CAP + 1):
        instance = f"|X|={size}"
        with result.guarded("Spec P(X)", instance):
            spectrum = spec_finite_boolean(size)
            result.add(
                "|Spec P(X)| = |X|", instance, len(spectrum.points) == size, len(spectrum.points)
            )
            result.add("Spec P(X) discrete", instance, spectrum.is_discrete)
            result.add("ultrafilters are principal", instance, all_principal_ultrafilters(size))
            result.add("D(A) matches d(A)", instance, basic_opens_correspond(spectrum))
        result.add(
            "characteristic map is a ring isomorphism",
            instance,
            characteristic_isomorphism_holds(size),
        )
    for size in range(1, settings.BRUTE_FORCE_UNIVERSE_CAP + 1):
        instance = f"|X|={size}"
        found = set(brute_force_maximal_ideals(size))
        expected = {principal_members(size, x) for x in range(size)}
        result.add(
            "exhaustive maximal ideals are principal",
            instance,
            found == expected,
            {"found": len(found), "expected": len(expected)},
        )
        ring = power_set_ring(size)
        _sweep(
            result,
            "ideals are unions closed downward",
            instance,
            enumerate_ideals(ring),
            lambda ideal, ring=ring: union_and_downward_closed(
                element_to_subset(ring, a) for a in ideal.members
            ),
            lambda ideal: [list(label) for label in ideal.labels()],
        )


# Ultra suites


def discrete_stone_cech(ctx: SuiteContext, result: SuiteResult) -> None:
    limit = settings.UNIVERSAL_CHECK_CAP
    families = [(m, UltraKind.STAR) for m in FIELD_FAMILIES]
    families += [(m, UltraKind.FLAT) for m in LOCAL_FAMILIES]
    for moduli, kind in families:
        for size in range(1, limit + 1):
            ring = _family_ring(moduli[:size])
            for target in range(1, limit + 1):
                instance = f"{_family_name(moduli[:size])} |Y|={target}"
                with result.guarded(f"unique factorization ({kind})", instance, ring):
                    witnesses = all_maps_factor(ring, target, kind)
                    failures = [w for w in witnesses if not w.unique]
                    witness: Any = len(witnesses)
                    if failures:
                        first = failures[0]
                        witness = {
                            "mapping": list(first.mapping),
                            "extension": list(first.extension),
                            "factors": first.factors,
                            "continuous_extensions": first.continuous_extensions,
                        }
                    result.add(
                        f"unique factorization ({kind})", instance, not failures, witness, ring
                    )


def ultra_homeomorphisms(ctx: SuiteContext, result: SuiteResult) -> None:
    for fields, locals_ in zip(FIELD_FAMILIES, LOCAL_FAMILIES):
        for size in range(1, settings.UNIVERSAL_CHECK_CAP + 1):
            field_ring = _family_ring(fields[:size])
            local_ring = _family_ring(locals_[:size])
            field_name = _family_name(fields[:size])
            local_name = _family_name(locals_[:size])
            with result.guarded("support homeomorphism", field_name, field_ring):
                star = star_homeomorphism(size, field_ring)
                result.add(
                    "support homeomorphism",
                    field_name,
                    star.holds,
                    {"eta": star.eta_compatible, "formula": star.basic_open_formula},
                    field_ring,
                )
                result.add(
                    "Delta_x isolates p_x",
                    field_name,
                    delta_isolates(field_ring, star.site, star.eta),
                    source=field_ring,
                )
            with result.guarded("unit locus homeomorphism", local_name, local_ring):
                flat = flat_homeomorphism(size, local_ring)
                result.add(
                    "unit locus homeomorphism",
                    local_name,
                    flat.holds,
                    {"eta": flat.eta_compatible, "formula": flat.basic_open_formula},
                    local_ring,
                )
                result.add(
                    "Delta_x isolates M_x",
                    local_name,
                    delta_isolates(local_ring, flat.site, flat.eta),
                    source=local_ring,
                )
                result.add(
                    "Min -> Max sends p_x to M_x",
                    f"{field_name} / {local_name}",
                    composite_sends_kernels_to_maximals(star, flat),
                    source=local_ring,
                )


def _check_ultra_point(result: SuiteResult, ring: ProductRing, name: str, x: int) -> None:
    size = len(ring.labels)
    instance = f"{name} at {ring.labels[x]}"
    point = PrincipalMax(size, x)
    factor = ring.factors[x]
    star = ultraproduct(point, ring, UltraKind.STAR)
    expected = {"field": is_field(factor), "domain": is_domain(factor), "local": True}
    classification = star.classify()
    result.add("R/M* is R_x", instance, classification == expected, classification, ring)
    flat = ultraproduct(point, ring, UltraKind.FLAT)
    result.add("R/M-flat is a field", instance, is_field(flat.ring), flat.ring.order, ring)
    residue_field_comparison(point, ring)
    result.add("residue field comparison", instance, True, flat.ring.order)
    result.add(
        "M* inside M-flat", instance, star.ultra.ideal.issubset(flat.ultra.ideal), source=ring
    )
    max_masks = {m.mask for m in max_ideals(ring).points}
    if is_domain(factor):
        min_masks = {p.mask for p in min_primes(ring).points}
        result.add(
            "M* is a minimal prime",
            instance,
            is_prime(star.ultra.ideal) and star.ultra.ideal.mask in min_masks,
            source=ring,
        )
    else:
        # R/M* is the non-domain R_x, so M* is not prime
        result.add("R/M* is local", instance, is_local(star.ring), star.ring.order, ring)
    result.add("M-flat is maximal", instance, flat.ultra.ideal.mask in max_masks, source=ring)
    if classification["domain"]:
        # a finite domain is its own fraction field
        result.add(
            "finite domain quotient is a field",
            instance,
            classification["field"],
            {"degenerate": True},
            ring,
        )


def _check_supports(result: SuiteResult, ring: ProductRing, name: str) -> None:
    size = len(ring.labels)
    full = (1 << size) - 1
    su, omega = support_bits(ring)
    elements = ring.elements()
    products = ring.mul_many(elements[:, None], elements[None, :])
    sums = ring.add_many(elements[:, None], elements[None, :])
    if _fields_only(ring):
        result.add(
            "Su(fg) = Su(f) & Su(g)",
            name,
            bool((su[products] == (su[:, None] & su[None, :])).all()),
            source=ring,
        )
    result.add(
        "Omega(fg) = Omega(f) & Omega(g)",
        name,
        bool((omega[products] == (omega[:, None] & omega[None, :])).all()),
        source=ring,
    )
    result.add(
        "Su(f) ^ Su(g) inside Su(f + g)",
        name,
        bool((((su[:, None] ^ su[None, :]) & ~su[sums]) == 0).all()),
        source=ring,
    )
    result.add(
        "Omega(f) = X iff f is a unit",
        name,
        bool(((omega == full) == ring.unit_mask).all()),
        source=ring,
    )
    result.add(
        "Omega(f) empty iff f in J",
        name,
        bool(((omega == 0) == jacobson_radical(ring).flags).all()),
        source=ring,
    )
    if size <= settings.BRUTE_FORCE_UNIVERSE_CAP:
        power = power_set_ring(size)

        def preimages_are_ideals(ideal: Any) -> bool:
            family = {element_to_subset(power, a).bits for a in ideal.members}
            return is_ideal(ring, support_preimage(ring, family)) and is_ideal(
                ring, unit_locus_preimage(ring, family)
            )

        _sweep(
            result,
            "support preimages of ideals are ideals",
            name,
            enumerate_ideals(power),
            preimages_are_ideals,
            lambda ideal: [list(label) for label in ideal.labels()],
            lambda ideal: ring,
        )


def ultra_rings(ctx: SuiteContext, result: SuiteResult) -> None:
    for entry in ctx.corpus():
        ring = entry.ring
        if not (isinstance(ring, ProductRing) and ring.is_atom_product):
            continue
        for x in range(len(ring.labels)):
            with result.guarded("ultra quotients", f"{entry.name} at {ring.labels[x]}", ring):
                _check_ultra_point(result, ring, entry.name, x)
        _check_supports(result, ring, entry.name)


def three_spaces_suite(ctx: SuiteContext, result: SuiteResult) -> None:
    for entry in ctx.corpus():
        if entry.ring.is_zero_ring:
            continue
        with result.guarded("three spaces homeomorphic", entry.name, entry.ring):
            witness = three_spaces(entry.ring)
            counts = {witness.min_count, witness.spec_count, witness.max_count}
            result.add(
                "three spaces homeomorphic",
                entry.name,
                witness.homeomorphic and len(counts) == 1,
                witness.to_dict(),
                entry.ring,
            )


# Compactification suites


def _random_fin_cofin(rng: np.random.Generator, cofinite: bool | None = None) -> UPSet:
    members = [n for n in range(12) if rng.random() < 0.3]
    s = UPSet.finite(members)
    flip = rng.random() < 0.5 if cofinite is None else cofinite
    return ~s if flip else s


def _random_periodic(rng: np.random.Generator) -> UPSet:
    threshold = int(rng.integers(0, 7))
    period = int(rng.integers(1, 7))
    head = [h for h in range(threshold) if rng.random() < 0.5]
    residues = [r for r in range(period) if rng.random() < 0.5]
    return UPSet.build(threshold, head, period, residues)


def _non_member(rng: np.random.Generator, point: PrincipalPoint | InfinityPoint) -> UPSet:
    if isinstance(point, InfinityPoint):
        return _random_fin_cofin(rng, cofinite=True)
    return _random_fin_cofin(rng) | UPSet.finite([point.x])


def _cover_holds(
    compactification: Compactification, cover: list[UPSet]
) -> tuple[bool, dict[str, Any]]:
    outcome = check_cover(compactification, cover)
    if outcome.covers:
        thinned = list(outcome.subcover)
        holds = check_cover(compactification, thinned).covers and all(s in cover for s in thinned)
        return holds, {"subcover": [str(s) for s in thinned]}
    point = outcome.uncovered
    holds = point is not None and not any(point.in_basic_open(s) for s in cover)
    return holds, {"uncovered": point.to_dict() if point is not None else None}


def _infinity_expected(s: UPSet) -> frozenset[int]:
    return frozenset({0}) if s.is_cofinite else frozenset()


def alexandroff_suite(ctx: SuiteContext, result: SuiteResult) -> None:
    rng = np.random.default_rng(ctx.seed)
    alpha = alexandroff()
    single = len(alpha.infinity) == 1 and alpha.infinity[0].atom.is_universe
    result.add("one point at infinity", "Fin/Cofin(N)", single, len(alpha.infinity))

    samples = [_random_fin_cofin(rng) for _ in range(30)]
    points = alpha.sample_points(ALEXANDROFF_SAMPLE_POINTS)
    for point in points:
        violations = ideal_law_violations(point, samples)
        result.add("ideal laws", str(point), not violations, violations or len(samples), samples)
    result.add("Hausdorff on sample", "Fin/Cofin(N)", alpha.is_hausdorff_on(points))

    probes = []
    for i in range(settings.SAMPLED_NON_MEMBERS):
        point = points[i % len(points)]
        probes.append((point, _non_member(rng, point)))
    _sweep(
        result,
        "maximality witnesses",
        "Fin/Cofin(N)",
        probes,
        lambda probe: maximality_witness(alpha.ring, probe[0], probe[1]).holds(),
        lambda probe: {"point": probe[0].to_dict(), "element": str(probe[1])},
        lambda probe: probe[1],
    )
    _sweep(
        result,
        "infinity lies in D(A) iff A is cofinite",
        "Fin/Cofin(N)",
        samples,
        lambda s: alpha.basic_open(s).infinity == _infinity_expected(s),
        str,
        lambda s: s,
    )
    _sweep(
        result,
        "non-empty basic opens meet N",
        "Fin/Cofin(N)",
        samples,
        lambda s: (alpha.dense_witness(s) is None) == s.is_empty,
        str,
        lambda s: s,
    )

    covers = [[UPSet.finite([0]), UPSet.finite([1]), UPSet.at_least(1)]]
    for _ in range(settings.PRESENTED_COVERS - 1):
        count = int(rng.integers(1, 5))
        covers.append([_random_fin_cofin(rng) for _ in range(count)])
    for i, cover in enumerate(covers):
        holds, witness = _cover_holds(alpha, cover)
        result.add("finite subcover or uncovered point", f"cover#{i}", holds, witness, cover)


def _generator_families(rng: np.random.Generator) -> list[list[UPSet]]:
    families = [
        [],
        [UPSet.residue_class(2, 0)],
        [UPSet.residue_class(3, 0)],
        [UPSet.residue_class(2, 0), UPSet.residue_class(3, 0)],
        [UPSet.at_least(5)],
        [UPSet.finite([1, 2, 3])],
        [UPSet.residue_class(4, 1), UPSet.residue_class(2, 1)],
        [UPSet.residue_class(2, 0), UPSet.residue_class(4, 1), UPSet.at_least(7)],
        [UPSet.residue_class(5, 2), UPSet.residue_class(2, 0), UPSet.finite([0, 4])],
        [UPSet.residue_class(6, r) for r in range(3)],
        [~UPSet.residue_class(3, 0)],
    ]
    for _ in range(3):
        families.append([_random_periodic(rng) for _ in range(int(rng.integers(0, 4)))])
    return families


def totally_disconnected(ctx: SuiteContext, result: SuiteResult) -> None:
    rng = np.random.default_rng(ctx.seed)
    for generators in _generator_families(rng):
        instance = "<" + ", ".join(str(g) for g in generators) + ">"
        with result.guarded("clopen round trip", instance, generators):
            compactification = compactify(generators)
            clop = clop_of_compactification(compactification)
            result.add(
                "clopen round trip",
                instance,
                same_ring(clop, compactification.ring),
                clop.describe(),
                generators,
            )
            points = compactification.sample_points(6)
            result.add(
                "Hausdorff on sample",
                instance,
                compactification.is_hausdorff_on(points),
                len(points),
                generators,
            )
            result.add(
                "generators have clopen basic opens",
                instance,
                all(compactification.basic_open_is_clopen(g, points) for g in generators),
                len(compactification.infinity),
                generators,
            )
    for size in range(1, ctx.max_space + 1):
        spaces = enumerate_spaces(size)
        _sweep(
            result,
            "components are Spec Clop",
            f"{size} points",
            spaces,
            pi0_spec_check,
            lambda space: space.describe(),
            lambda space: space,
        )
        _sweep(
            result,
            "Clop has 2^components elements",
            f"{size} points",
            spaces,
            lambda space: len(clopens(space.topology))
            == 1 << clop_of_compactification(space).universe_size,
            lambda space: space.describe(),
            lambda space: space,
        )


# Finite space suites


def _converge_matches_closure(space: FiniteSpace) -> bool:
    # converges raises on disagreement
    for y, x in itertools.product(range(space.size), repeat=2):
        converges(space, y, x)
    return True


def _open_sets_match(space: FiniteSpace) -> bool:
    relation = convergence_relation(space)
    for subset in range(1 << space.size):
        open_via_convergence(space, subset, relation)
    return True


def _maps(size: int, target: int) -> Iterable[tuple[int, ...]]:
    return itertools.product(range(target), repeat=size)


def _continuity_agrees(pair: tuple[FiniteSpace, FiniteSpace]) -> bool:
    source, target = pair
    for mapping in _maps(source.size, target.size):
        continuous = continuous_via_convergence(mapping, source, target)
        if continuous and not injective_when_dense(mapping, source, target):
            return False
    return True


def finite_space_beta(ctx: SuiteContext, result: SuiteResult) -> None:
    by_size: dict[int, list[FiniteSpace]] = {}
    for size in range(1, ctx.max_space + 1):
        spaces = enumerate_spaces(size)
        by_size[size] = spaces
        expected = KNOWN_TOPOLOGY_COUNTS.get(size, len(spaces))
        result.add(
            "labeled topology count", f"{size} points", len(spaces) == expected, len(spaces)
        )
        instance = f"{size} points"
        _sweep(
            result,
            "beta is the component quotient",
            instance,
            spaces,
            lambda space: beta(space).partition == tuple(space.components()),
            lambda space: space.describe(),
            lambda space: space,
        )
        _sweep(
            result,
            "beta partition is extremal",
            instance,
            spaces,
            lambda space: beta_is_extremal(space, beta(space).partition),
            lambda space: space.describe(),
            lambda space: space,
        )
        _sweep(
            result,
            "convergence matches closure",
            instance,
            spaces,
            _converge_matches_closure,
            lambda space: space.describe(),
            lambda space: space,
        )
        _sweep(
            result,
            "openness via convergence",
            instance,
            spaces,
            _open_sets_match,
            lambda space: space.describe(),
            lambda space: space,
        )
        discrete = FiniteSpace.discrete(size)
        result.add(
            "beta of a discrete space is itself",
            instance,
            beta(discrete).partition == tuple((x,) for x in range(size)),
            source=discrete,
        )

    small = [
        space
        for size in range(1, min(CONTINUITY_SWEEP_POINTS, ctx.max_space) + 1)
        for space in by_size[size]
    ]
    _sweep(
        result,
        "continuity via convergence",
        f"spaces up to {min(CONTINUITY_SWEEP_POINTS, ctx.max_space)} points",
        [(source, target) for source in small for target in small],
        _continuity_agrees,
        lambda pair: {"source": pair[0].describe(), "target": pair[1].describe()},
        lambda pair: pair[0],
    )


def ring_map_counts(ctx: SuiteContext, result: SuiteResult) -> None:
    limit = settings.RING_MAP_UNIVERSE_CAP
    for source in range(1, limit + 1):
        for target in range(1, limit + 1):
            instance = f"|X|={source} |Y|={target}"
            with result.guarded("ring maps are set maps", instance):
                counted = count_ring_maps(source, target)
                result.add(
                    "ring maps are set maps",
                    instance,
                    counted.count == counted.expected
                    and len(set(counted.set_maps)) == counted.count,
                    {"count": counted.count, "expected": counted.expected},
                )
            spec_source = spec_finite_boolean(source).topology
            spec_target = spec_finite_boolean(target).topology
            continuous = sum(
                1
                for mapping in _maps(source, target)
                if all(
                    spec_source.is_open(
                        sum(1 << x for x, image in enumerate(mapping) if (v >> image) & 1)
                    )
                    for v in spec_target.opens
                )
            )
            expected = count_ring_maps(target, source).count
            result.add(
                "continuous Spec maps match ring maps",
                instance,
                continuous == expected,
                {"continuous": continuous, "ring_maps": expected},
            )
    for size in range(1, settings.BOOLEAN_UNIVERSE_CAP + 1):
        points = len(spec_finite_boolean(size).points)
        result.add("|Spec P(X)| = |X|", f"|X|={size}", points == size, points)


# Periodic set suite

_BINARY_OPS: dict[str, tuple[Callable[[UPSet, UPSet], UPSet], Callable[..., np.ndarray]]] = {
    "union": (lambda a, b: a | b, np.logical_or),
    "intersection": (lambda a, b: a & b, np.logical_and),
    "symmetric difference": (lambda a, b: a ^ b, np.logical_xor),
    "difference": (lambda a, b: a - b, lambda a, b: a & ~b),
}


def periodic_sets(ctx: SuiteContext, result: SuiteResult) -> None:
    rng = np.random.default_rng(ctx.seed)
    triples = [
        (_random_periodic(rng), _random_periodic(rng), _random_periodic(rng))
        for _ in range(PERIODIC_SAMPLES)
    ]
    describe, source = _set_dicts, _set_list
    for name, (op, oracle) in _BINARY_OPS.items():
        _sweep(
            result,
            f"{name} agrees with oracle",
            f"{PERIODIC_SAMPLES} samples",
            triples,
            lambda t, op=op, oracle=oracle: agrees_with_oracle(
                op(t[0], t[1]), [t[0], t[1]], oracle
            ),
            describe,
            source,
        )
    _sweep(
        result,
        "complement agrees with oracle",
        f"{PERIODIC_SAMPLES} samples",
        triples,
        lambda t: agrees_with_oracle(~t[0], [t[0]], np.logical_not) and ~~t[0] == t[0],
        describe,
        source,
    )
    _sweep(
        result,
        "canonical form is idempotent",
        f"{PERIODIC_SAMPLES} samples",
        triples,
        lambda t: canonicalize(t[0]).is_canonical and canonicalize(canonicalize(t[0])) == t[0],
        describe,
        source,
    )
    _sweep(
        result,
        "Boolean ring laws",
        f"{PERIODIC_SAMPLES} samples",
        triples,
        lambda t: (t[0] ^ t[1]) ^ t[2] == t[0] ^ (t[1] ^ t[2])
        and t[0] & (t[1] ^ t[2]) == (t[0] & t[1]) ^ (t[0] & t[2])
        and (t[0] ^ t[0]).is_empty
        and t[0] & t[0] == t[0]
        and ~(t[0] | t[1]) == ~t[0] & ~t[1],
        describe,
        source,
    )
    _sweep(
        result,
        "atoms partition N and generate",
        f"{PERIODIC_SAMPLES} samples",
        triples,
        _atoms_generate,
        describe,
        source,
    )


def _set_dicts(sets: Sequence[UPSet]) -> list[dict[str, Any]]:
    return [s.to_dict() for s in sets]


def _set_list(sets: Sequence[UPSet]) -> list[UPSet]:
    return list(sets)


def _atoms_generate(generators: Sequence[UPSet]) -> bool:
    decomposition = atom_decompose(generators)
    decomposition.verify()
    for g in generators:
        union = UPSet.empty()
        for atom in decomposition.atoms:
            if (atom & g) == atom:
                union = union | atom
        if union != g:
            return False
    return True


SuiteFn = Callable[[SuiteContext, SuiteResult], None]

SUITES: dict[str, SuiteFn] = {
    "ring-axioms": ring_axioms,
    "localization-kernel": localization_kernel,
    "minimal-primes": minimal_primes,
    "min-max-topologies": min_max_topologies,
    "boolean-spectrum": boolean_spectrum,
    "discrete-stone-cech": discrete_stone_cech,
    "ultra-homeomorphisms": ultra_homeomorphisms,
    "ultra-rings": ultra_rings,
    "three-spaces": three_spaces_suite,
    "alexandroff": alexandroff_suite,
    "totally-disconnected": totally_disconnected,
    "finite-space-beta": finite_space_beta,
    "ring-map-counts": ring_map_counts,
    "periodic-sets": periodic_sets,
}


def resolve_suites(selection: str) -> list[str]:
    """
    Raises:
        ValueError: Unknown suite id
    """
    if selection == "all":
        return sorted(SUITES)
    if selection not in SUITES:
        raise ValueError(f"Unknown suite: {selection}. Must be one of {sorted(SUITES)} or all")
    return [selection]


def run_suite(suite_id: str, ctx: SuiteContext) -> SuiteResult:
    result = SuiteResult(suite_id)
    logger.info(f"Running suite {suite_id}")
    start = time.perf_counter()
    with result.guarded("suite completed", suite_id):
        SUITES[suite_id](ctx, result)
    result.seconds = time.perf_counter() - start
    logger.info(
        f"Suite {suite_id}: {len(result.records)} checks, {len(result.failures)} failed "
        f"in {result.seconds:.2f}s"
    )
    return result


async def _run_parallel(suite_ids: list[str], ctx: SuiteContext) -> list[SuiteResult]:
    tasks = [asyncio.to_thread(run_suite, suite_id, ctx) for suite_id in suite_ids]
    return list(await asyncio.gather(*tasks))


def run_suites(
    suite_ids: list[str],
    ctx: SuiteContext,
    parallel: bool = True,
    timings: bool = False,
) -> Report:
    """
    Run the named suites and collect a report ordered by suite id.

    Args:
        suite_ids: Ids from SUITES
        ctx: Corpus bounds and seed
        parallel: Fan the suites out over worker threads
        timings: Include per-suite seconds in the report

    Raises:
        ValueError: Unknown suite id
        CapacityError: A suite exceeded a configured cap
    """
    unknown = [suite_id for suite_id in suite_ids if suite_id not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suites: {unknown}")
    if parallel and len(suite_ids) > 1:
        results = asyncio.run(_run_parallel(suite_ids, ctx))
    else:
        results = [run_suite(suite_id, ctx) for suite_id in suite_ids]
    report = Report(sorted(results, key=lambda r: r.suite_id), timings)
    summary = report.summary()
    logger.info(
        f"{summary['suites']} suites, {summary['checks']} checks, {summary['failures']} failed"
    )
    return report
