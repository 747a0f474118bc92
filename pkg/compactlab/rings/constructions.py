"""
Quotients and Localizations

Both constructions return a Table-backend ring together with the canonical ring map from the
source. Localization uses explicit fraction pairs (r, s) and the relation
(r, s) ~ (r', s') iff t(rs' - r's) = 0 for some t in S.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from compactlab.config import settings
from compactlab.errors import CapacityError
from compactlab.rings.base import FiniteRing, IndexArray, mask_from_bools
from compactlab.rings.ideals import Ideal, MultSet
from compactlab.rings.table import TableRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RingMap:
    """
    A function between finite rings given by the image of every element.

    Args:
        source: Domain ring
        target: Codomain ring
        images: images[a] is the image of element a
    """

    source: FiniteRing = field(repr=False)
    target: FiniteRing = field(repr=False)
    images: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    @property
    def image_array(self) -> IndexArray:
        return np.asarray(self.images, dtype=np.int64)

    def kernel(self) -> Ideal:
        return Ideal.from_flags(self.source, self.image_array == self.target.zero)

    def preimage(self, ideal: Ideal) -> Ideal:
        return Ideal.from_flags(self.source, ideal.flags[self.image_array])

    def is_injective(self) -> bool:
        return len(set(self.images)) == self.source.order

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def is_ring_homomorphism(self) -> bool:
        img = self.image_array
        if img[self.source.one] != self.target.one:
            return False
        for a in range(self.source.order):
            sums = img[self.source.add_row(a)]
            if not (sums == self.target.add_many(img[a], img)).all():
                return False
            products = img[self.source.mul_row(a)]
            if not (products == self.target.mul_many(img[a], img)).all():
                return False
        return True

    def compose(self, after: "RingMap") -> "RingMap":
        """``after`` applied to the result of ``self``."""
        return RingMap(self.source, after.target, tuple(after.images[b] for b in self.images))


def quotient(ring: FiniteRing, ideal: Ideal, cap: int | None = None) -> RingMap:
    """
    R/I as a Table ring together with the projection.

    Args:
        ring: Source ring
        ideal: Any ideal (the unit ideal yields the zero ring)
        cap: Order cap for the result (defaults to TABLE_RING_CAP)

    Returns:
        The surjective projection R -> R/I; ``.target`` is the quotient ring
    """
    members = ideal.indices
    labels = np.full(ring.order, -1, dtype=np.int64)
    representatives: list[int] = []
    for a in range(ring.order):
        if labels[a] >= 0:
            continue
        labels[ring.add_many(a, members)] = len(representatives)
        representatives.append(a)

    reps = np.asarray(representatives, dtype=np.int64)
    limit = settings.TABLE_RING_CAP if cap is None else cap
    if len(reps) > limit:
        raise CapacityError("quotient ring order", limit, len(reps))
    add_table = labels[ring.add_many(reps[:, None], reps[None, :])]
    mul_table = labels[ring.mul_many(reps[:, None], reps[None, :])]
    target = TableRing(add_table, mul_table, int(labels[ring.zero]), int(labels[ring.one]))
    logger.debug(f"Quotient of order {ring.order} ring by ideal of size {ideal.size}: {len(reps)} cosets")
    return RingMap(ring, target, tuple(int(c) for c in labels))


@dataclass(frozen=True)
class Localization:
    """
    S^-1 R with its fraction-pair presentation.

    Args:
        canonical: The canonical map r -> r/1
        mult_set: The inverted set S
        fractions: Representative pair (r, s) for each element of S^-1 R
    """

    canonical: RingMap
    mult_set: MultSet = field(repr=False)
    fractions: tuple[tuple[int, int], ...]
    _class_of_pair: IndexArray = field(repr=False, compare=False)
    _position: IndexArray = field(repr=False, compare=False)

    @property
    def ring(self) -> FiniteRing:
        return self.canonical.target

    def fraction(self, r: int, s: int) -> int:
        """The element r/s of S^-1 R."""
        position = int(self._position[s])
        if position < 0:
            raise ValueError(f"Denominator {s} is not in the multiplicative set")
        return int(self._class_of_pair[r, position])

    def kernel(self) -> Ideal:
        """Literal kernel of the canonical map: {f : tf = 0 for some t in S}."""
        return self.canonical.kernel()

    def radical_kernel(self) -> Ideal:
        """Preimage of the nilradical of S^-1 R; the intersection of the primes it sees."""
        return Ideal.from_flags(
            self.canonical.source, self.ring.nilpotent_mask[self.canonical.image_array]
        )


# Largest pairs-by-elements matrix built when classifying fraction pairs in one step
PAIR_MATRIX_LIMIT = 1 << 20

Classes = tuple[IndexArray, IndexArray]


def _classes_through_one(
    ring: FiniteRing, torsion: np.ndarray, numerators: IndexArray, denominators: IndexArray
) -> Classes | None:
    """
    Label every pair (r, s) by the class of a pair (r', 1) equivalent to it, all at once.

    Returns:
        (class label per pair, first pair of each class), or None when the matrices would
        exceed PAIR_MATRIX_LIMIT or some pair has no partner of the form (r', 1)
    """
    n = ring.order
    if len(numerators) * n > PAIR_MATRIX_LIMIT or n * n > PAIR_MATRIX_LIMIT:
        return None
    elements = ring.elements()
    # (r, s) ~ (r', 1) iff r - r's is S-torsion
    partner = torsion[
        ring.sub_many(numerators[:, None], ring.mul_many(elements[None, :], denominators[:, None]))
    ]
    if not partner.any(axis=1).all():
        return None
    # (r', 1) ~ (r'', 1) iff r' - r'' is S-torsion; the least such r'' names the class
    least = np.argmax(torsion[ring.sub_many(elements[:, None], elements[None, :])], axis=1)
    keys = least[np.argmax(partner, axis=1)]
    _, first, inverse = np.unique(keys, return_index=True, return_inverse=True)
    # number classes by their first pair, as the scan does
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first)] = np.arange(len(first))
    return rank[inverse.reshape(-1)], np.sort(first)


def _classes_by_scan(
    ring: FiniteRing, torsion: np.ndarray, numerators: IndexArray, denominators: IndexArray
) -> Classes:
    """One vectorized pass per class: label everything equivalent to the first unlabeled pair."""
    labels = np.full(len(numerators), -1, dtype=np.int64)
    representatives: list[int] = []
    for idx in range(len(numerators)):
        if labels[idx] >= 0:
            continue
        r, s = int(numerators[idx]), int(denominators[idx])
        cross = ring.sub_many(ring.mul_many(r, denominators), ring.mul_many(numerators, s))
        labels[torsion[cross] & (labels < 0)] = len(representatives)
        representatives.append(idx)
    return labels, np.asarray(representatives, dtype=np.int64)


def localize(ring: FiniteRing, mult_set: MultSet, cap: int | None = None) -> Localization:
    """
    S^-1 R by explicit pair-equivalence classes.

    Args:
        ring: Source ring
        mult_set: Multiplicative subset to invert
        cap: Order cap for the result (defaults to TABLE_RING_CAP)

    Returns:
        Localization carrying the canonical map and the fraction presentation

    Raises:
        CapacityError: |R|*|S| exceeds LOCALIZATION_PAIR_CAP, or the result exceeds the cap
    """
    denominators = mult_set.indices
    pair_count = ring.order * len(denominators)
    if pair_count > settings.LOCALIZATION_PAIR_CAP:
        raise CapacityError("localization pair count", settings.LOCALIZATION_PAIR_CAP, pair_count)

    # torsion[a] iff t*a = 0 for some t in S
    elements = ring.elements()
    torsion = (ring.mul_many(denominators[:, None], elements[None, :]) == ring.zero).any(axis=0)

    numerators_all = np.repeat(elements, len(denominators))
    denominators_all = np.tile(denominators, ring.order)
    classes = _classes_through_one(ring, torsion, numerators_all, denominators_all)
    if classes is None:
        classes = _classes_by_scan(ring, torsion, numerators_all, denominators_all)
    labels, representatives = classes
    fractions = [(int(numerators_all[i]), int(denominators_all[i])) for i in representatives]

    position = np.full(ring.order, -1, dtype=np.int64)
    position[denominators] = np.arange(len(denominators))
    class_of_pair = labels.reshape(ring.order, len(denominators))

    size = len(fractions)
    limit = settings.TABLE_RING_CAP if cap is None else cap
    if size > limit:
        raise CapacityError("localized ring order", limit, size)
    nums = np.asarray([r for r, _ in fractions], dtype=np.int64)
    dens = np.asarray([s for _, s in fractions], dtype=np.int64)
    # r/s + r'/s' = (rs' + r's)/(ss'),  r/s * r'/s' = rr'/(ss')
    den_products = ring.mul_many(dens[:, None], dens[None, :])
    sum_numerators = ring.add_many(
        ring.mul_many(nums[:, None], dens[None, :]), ring.mul_many(nums[None, :], dens[:, None])
    )
    product_numerators = ring.mul_many(nums[:, None], nums[None, :])
    add_table = class_of_pair[sum_numerators, position[den_products]]
    mul_table = class_of_pair[product_numerators, position[den_products]]

    one_position = int(position[ring.one])
    target = TableRing(
        add_table,
        mul_table,
        int(class_of_pair[ring.zero, one_position]),
        int(class_of_pair[ring.one, one_position]),
    )
    canonical = RingMap(
        ring, target, tuple(int(c) for c in class_of_pair[:, one_position])
    )
    logger.debug(f"Localized order {ring.order} ring at |S|={len(denominators)}: order {size}")
    return Localization(canonical, mult_set, tuple(fractions), class_of_pair, position)


def localize_at_prime(ring: FiniteRing, prime: Ideal, cap: int | None = None) -> Localization:
    """R_p: invert the complement of a prime ideal."""
    return localize(ring, MultSet.complement_of(prime), cap=cap)


def brute_force_nilpotent_products(ring: FiniteRing, mult_set: MultSet) -> Ideal:
    """{f : fg is nilpotent for some g in S}, from the full table of products fg."""
    products = ring.mul_many(ring.elements()[:, None], mult_set.indices[None, :])
    flags = ring.nilpotent_mask[products].any(axis=1)
    return Ideal(ring, mask_from_bools(flags), ())
