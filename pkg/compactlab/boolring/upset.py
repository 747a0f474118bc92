"""
Ultimately Periodic Subsets of the Naturals

A UPSet is given by a threshold N, a head (the members below N) and a period p with a set of
residues: n >= N is a member iff n mod p is one of the residues. These sets form a Boolean
algebra in which equality, emptiness, finiteness and cofiniteness are decidable, which is
enough to present the finite/cofinite ring and its finitely generated extensions exactly.

Every value is compared through its canonical form: minimal period first, then the least
threshold consistent with that period.
"""

import json
import logging
import re
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from functools import cached_property
from math import lcm
from typing import Any

import numpy as np
from sympy import divisors

from compactlab.errors import ParseError

logger = logging.getLogger(__name__)

CanonicalKey = tuple[int, frozenset[int], int, frozenset[int]]


def _canonical_key(
    threshold: int, head: frozenset[int], period: int, residues: frozenset[int]
) -> CanonicalKey:
    for d in divisors(period):
        d = int(d)
        if all((r in residues) == ((r % d) in residues) for r in range(period)):
            residues = frozenset(r for r in residues if r < d)
            period = d
            break
    while threshold > 0 and ((threshold - 1) in head) == (((threshold - 1) % period) in residues):
        threshold -= 1
    head = frozenset(h for h in head if h < threshold)
    return threshold, head, period, residues


@dataclass(frozen=True, eq=False)
class UPSet:
    """
    An ultimately periodic subset of the naturals.

    Args:
        threshold: N >= 0
        head: Members below N
        period: p >= 1
        residues: Residues mod p of the members at or above N

    Raises:
        ValueError: Malformed fields

    Equality and hashing use the canonical form, so two presentations of the same set compare
    equal. Operations and named constructors always return canonical values.
    """

    threshold: int
    head: frozenset[int]
    period: int
    residues: frozenset[int]
    _key: CanonicalKey = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "head", frozenset(int(h) for h in self.head))
        object.__setattr__(self, "residues", frozenset(int(r) for r in self.residues))
        if self.threshold < 0:
            raise ValueError(f"Threshold must be non-negative, got {self.threshold}")
        if self.period < 1:
            raise ValueError(f"Period must be positive, got {self.period}")
        if any(not 0 <= h < self.threshold for h in self.head):
            raise ValueError(f"Head {sorted(self.head)} must lie below threshold {self.threshold}")
        if any(not 0 <= r < self.period for r in self.residues):
            raise ValueError(f"Residues {sorted(self.residues)} must lie in [0, {self.period})")
        object.__setattr__(
            self, "_key", _canonical_key(self.threshold, self.head, self.period, self.residues)
        )

    # Identity

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UPSet):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    @property
    def is_canonical(self) -> bool:
        return (self.threshold, self.head, self.period, self.residues) == self._key

    def sort_key(self) -> tuple[int, int, tuple[int, ...], tuple[int, ...]]:
        threshold, head, period, residues = self._key
        return threshold, period, tuple(sorted(residues)), tuple(sorted(head))

    # Named constructors

    @classmethod
    def build(
        cls, threshold: int, head: Iterable[int], period: int, residues: Iterable[int]
    ) -> "UPSet":
        return cls(threshold, frozenset(head), period, frozenset(residues)).canonical()

    @classmethod
    def empty(cls) -> "UPSet":
        return cls.build(0, (), 1, ())

    @classmethod
    def universe(cls) -> "UPSet":
        return cls.build(0, (), 1, (0,))

    @classmethod
    def finite(cls, members: Iterable[int]) -> "UPSet":
        head = frozenset(int(m) for m in members)
        if any(m < 0 for m in head):
            raise ValueError(f"Naturals only, got {sorted(head)}")
        return cls.build(max(head, default=-1) + 1, head, 1, ())

    @classmethod
    def cofinite(cls, missing: Iterable[int]) -> "UPSet":
        return ~cls.finite(missing)

    @classmethod
    def at_least(cls, bound: int) -> "UPSet":
        return cls.build(bound, (), 1, (0,))

    @classmethod
    def residue_class(cls, modulus: int, residue: int) -> "UPSet":
        return cls.build(0, (), modulus, (residue % modulus,))

    def canonical(self) -> "UPSet":
        if self.is_canonical:
            return self
        threshold, head, period, residues = self._key
        return UPSet(threshold, head, period, residues)

    # Membership and predicates

    def __contains__(self, n: object) -> bool:
        if not isinstance(n, int | np.integer) or n < 0:
            return False
        if n < self.threshold:
            return int(n) in self.head
        return int(n) % self.period in self.residues

    def indicator(self, horizon: int) -> np.ndarray:
        """Membership of 0..horizon-1 as a boolean array."""
        n = np.arange(horizon, dtype=np.int64)
        below = np.isin(n, np.fromiter(self.head, dtype=np.int64, count=len(self.head)))
        above = np.isin(
            n % self.period, np.fromiter(self.residues, dtype=np.int64, count=len(self.residues))
        )
        return np.where(n < self.threshold, below, above)

    @property
    def is_empty(self) -> bool:
        _, head, _, residues = self._key
        return not head and not residues

    @property
    def is_finite(self) -> bool:
        return not self._key[3]

    @property
    def is_cofinite(self) -> bool:
        _, _, period, residues = self._key
        return len(residues) == period

    @property
    def is_universe(self) -> bool:
        return self.is_cofinite and len(self._key[1]) == self._key[0]

    def first(self) -> int | None:
        """Least member, or None for the empty set."""
        threshold, head, period, residues = self._key
        if head:
            return min(head)
        if not residues:
            return None
        return min(threshold + (r - threshold) % period for r in residues)

    def finite_members(self) -> tuple[int, ...]:
        if not self.is_finite:
            raise ValueError("Set is infinite")
        return tuple(sorted(self._key[1]))

    def issubset(self, other: "UPSet") -> bool:
        return (self - other).is_empty

    # Boolean algebra

    def _combine(self, other: "UPSet", op: Callable[[bool, bool], bool]) -> "UPSet":
        threshold = max(self.threshold, other.threshold)
        period = lcm(self.period, other.period)
        head = [n for n in range(threshold) if op(n in self, n in other)]
        residues = [
            r
            for r in range(period)
            if op(r % self.period in self.residues, r % other.period in other.residues)
        ]
        return UPSet.build(threshold, head, period, residues)

    def __or__(self, other: "UPSet") -> "UPSet":
        return self._combine(other, lambda a, b: a or b)

    def __and__(self, other: "UPSet") -> "UPSet":
        return self._combine(other, lambda a, b: a and b)

    def __xor__(self, other: "UPSet") -> "UPSet":
        return self._combine(other, lambda a, b: a != b)

    def __sub__(self, other: "UPSet") -> "UPSet":
        return self._combine(other, lambda a, b: a and not b)

    def __invert__(self) -> "UPSet":
        return UPSet.build(
            self.threshold,
            (n for n in range(self.threshold) if n not in self.head),
            self.period,
            (r for r in range(self.period) if r not in self.residues),
        )

    # ring notation: + is symmetric difference, * is intersection
    __add__ = __xor__
    __mul__ = __and__

    # Text forms

    def to_dict(self) -> dict[str, Any]:
        threshold, head, period, residues = self._key
        if self.is_finite:
            return {"finite": sorted(head)}
        if self.is_cofinite:
            return {"cofinite": sorted(n for n in range(threshold) if n not in head)}
        return {
            "head": sorted(head),
            "threshold": threshold,
            "period": period,
            "residues": sorted(residues),
        }

    @cached_property
    def _text(self) -> str:
        threshold, head, period, residues = self._key
        if self.is_finite:
            return "{" + ",".join(str(h) for h in sorted(head)) + "}"
        if self.is_cofinite:
            missing = [n for n in range(threshold) if n not in head]
            return "N" if not missing else "N\\{" + ",".join(str(m) for m in missing) + "}"
        tail = "{n mod " + str(period) + " in " + "{" + ",".join(str(r) for r in sorted(residues)) + "}}"
        if threshold == 0:
            return tail
        return "{" + ",".join(str(h) for h in sorted(head)) + "}+" + f"n>={threshold}:" + tail

    def __str__(self) -> str:
        return self._text

    def __repr__(self) -> str:
        return f"UPSet({self._text})"


def canonicalize(s: UPSet) -> UPSet:
    """Minimal period, then minimal threshold. Idempotent; preserves membership."""
    return s.canonical()


def oracle_horizon(*sets: UPSet) -> int:
    """A prefix length on which agreement of membership decides equality of the sets."""
    if not sets:
        return 0
    period = lcm(*(s.period for s in sets))
    return 4 * period + max(s.threshold for s in sets)


def agrees_with_oracle(
    result: UPSet, operands: list[UPSet], op: Callable[..., np.ndarray]
) -> bool:
    """
    Compare ``result`` with ``op`` applied to the operands' membership vectors.

    Args:
        result: Symbolically computed set
        operands: Inputs to the operation
        op: The same operation on numpy boolean arrays

    Returns:
        True iff membership agrees on the whole oracle horizon
    """
    horizon = oracle_horizon(result, *operands)
    expected = op(*(s.indicator(horizon) for s in operands))
    return bool((result.indicator(horizon) == expected).all())


# Parsing

_AT_LEAST = re.compile(r"^\{\s*n\s*>=\s*(\d+)\s*\}$")
_RESIDUE = re.compile(r"^\{\s*n\s*(?:mod|%)\s*(\d+)\s*=+\s*(\d+)\s*\}$")
_LISTED = re.compile(r"^\{\s*(\d+(?:\s*,\s*\d+)*)?\s*\}$")
_NAMED = {
    "evens": lambda: UPSet.residue_class(2, 0),
    "odds": lambda: UPSet.residue_class(2, 1),
    "all": UPSet.universe,
    "empty": UPSet.empty,
}


def parse_upset(text: str) -> UPSet:
    """
    Parse a probe or a JSON set description.

    Accepted forms: ``{n>=3}``, ``{n mod 3 = 1}``, ``{0,2,5}``, ``evens``, ``odds``,
    ``all``, ``empty``, an optional leading ``~`` for the complement, and the JSON object
    forms of ``upset_from_dict``.

    Raises:
        ParseError: The text matches no accepted form
    """
    stripped = text.strip()
    if stripped.startswith("~"):
        return ~parse_upset(stripped[1:])
    if stripped in _NAMED:
        return _NAMED[stripped]()
    if match := _AT_LEAST.match(stripped):
        return UPSet.at_least(int(match.group(1)))
    if match := _RESIDUE.match(stripped):
        modulus = int(match.group(1))
        if modulus < 1:
            raise ParseError(f"Modulus must be positive in {text!r}")
        return UPSet.residue_class(modulus, int(match.group(2)))
    if match := _LISTED.match(stripped):
        body = match.group(1)
        return UPSet.finite(int(part) for part in body.split(",")) if body else UPSet.empty()
    try:
        data = json.loads(stripped)
    except json.JSONDecodeError as e:
        raise ParseError(f"Unrecognized set {text!r}", line=e.lineno) from e
    return upset_from_dict(data)


def _int_list(data: dict[str, Any], key: str) -> list[int]:
    value = data.get(key, [])
    if not isinstance(value, list) or any(
        not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in value
    ):
        raise ParseError("Expected a list of naturals", field=key)
    return value


def upset_from_dict(data: Any) -> UPSet:
    """
    Build a set from ``{"head", "threshold", "period", "residues"}`` or the shorthands
    ``{"finite": [...]}`` and ``{"cofinite": [...]}``.
    """
    if not isinstance(data, dict):
        raise ParseError("Set description must be an object")
    if "finite" in data:
        return UPSet.finite(_int_list(data, "finite"))
    if "cofinite" in data:
        return UPSet.cofinite(_int_list(data, "cofinite"))
    for key in ("threshold", "period"):
        value = data.get(key, 0 if key == "threshold" else None)
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParseError(f"Expected an integer, got {value!r}", field=key)
    try:
        return UPSet.build(
            data.get("threshold", 0),
            _int_list(data, "head"),
            data["period"],
            _int_list(data, "residues"),
        )
    except ValueError as e:
        raise ParseError(str(e), field="upset") from e
