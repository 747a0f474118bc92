"""
Finite Space Package

Finite topological spaces as preorders, Zariski convergence of the maximal ideals of P(X),
continuity through convergence, and the Stone-Cech compactification of a finite space.
"""

from compactlab.topspace.beta import (
    ClopMap,
    ClopRing,
    QuotientWitness,
    beta,
    beta_is_extremal,
    clop_functor,
    clop_ring,
    factor_through,
    image_is_dense,
    injective_when_dense,
    partition_is_universal,
    pi0_spec_check,
    tilde_partition,
)
from compactlab.topspace.convergence import (
    ConvergenceRelation,
    continuous_via_convergence,
    convergence_relation,
    converges,
    is_continuous,
    open_via_convergence,
    pushforward_point,
)
from compactlab.topspace.corpus import enumerate_spaces
from compactlab.topspace.space import FiniteSpace, load_space, parse_space, space_from_description

__all__ = [
    "FiniteSpace",
    "load_space",
    "parse_space",
    "space_from_description",
    "ConvergenceRelation",
    "convergence_relation",
    "converges",
    "open_via_convergence",
    "is_continuous",
    "continuous_via_convergence",
    "pushforward_point",
    "QuotientWitness",
    "beta",
    "beta_is_extremal",
    "tilde_partition",
    "partition_is_universal",
    "factor_through",
    "ClopRing",
    "ClopMap",
    "clop_ring",
    "clop_functor",
    "image_is_dense",
    "injective_when_dense",
    "pi0_spec_check",
    "enumerate_spaces",
]
