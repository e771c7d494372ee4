"""Permutation groups, the subgroup families of S_n, and the GroupSpec language."""

from .catalog import CatalogError, UnknownGroup, named_group
from .group import (
    DEFAULT_CENSUS_CAP,
    CensusInfeasible,
    PermGroup,
    StabilizerChain,
    fixed_ksets,
)
from .spec import GroupSpec, SpecError, construct, parse_spec

__all__ = [
    "DEFAULT_CENSUS_CAP",
    "CatalogError",
    "CensusInfeasible",
    "GroupSpec",
    "PermGroup",
    "SpecError",
    "StabilizerChain",
    "UnknownGroup",
    "construct",
    "fixed_ksets",
    "named_group",
    "parse_spec",
]
