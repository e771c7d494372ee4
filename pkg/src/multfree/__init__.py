"""Multiplicity-free permutation characters of the symmetric groups.

Decompose ind_G^{S_n}(1) for subgroups G named by a small spec language,
by exact character census or by closed forms, and test which subgroups are
multiplicity free.
"""

from .closed_forms import closed_form
from .induction import Decomposition, cross_check, decompose_spec, induced_trivial, is_multiplicity_free, rank
from .partitions import MultiplicityVector, Partition, conjugate, outer_product, partitions_of
from .permgroups import construct, parse_spec

__version__ = "0.1.0"

__all__ = [
    "Decomposition",
    "MultiplicityVector",
    "Partition",
    "closed_form",
    "conjugate",
    "construct",
    "cross_check",
    "decompose_spec",
    "induced_trivial",
    "is_multiplicity_free",
    "outer_product",
    "parse_spec",
    "partitions_of",
    "rank",
]
