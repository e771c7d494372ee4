"""Named primitive groups loaded from a flat catalog file.

Each record is ``name<TAB>degree<TAB>order<TAB>gen;gen;...`` with 1-based
cycle notation.  The recorded order is checked against the stabilizer chain
when a group is first built.  ``MULTFREE_CATALOG`` overrides the shipped file.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from . import perm as P
from .group import PermGroup

ENV_VAR = "MULTFREE_CATALOG"

# alternative spellings accepted on input
ALIASES = {
    "Aut(PSL(2,9))": "PGammaL(2,9)",
    "AΓL(1,8)": "AGammaL(1,8)",
    "PΓL(2,8)": "PGammaL(2,8)",
    "PΓL(2,9)": "PGammaL(2,9)",
    "M11(11)": "M11",
    "M12(12)": "M12",
}


class UnknownGroup(KeyError):
    pass


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogRecord:
    name: str
    degree: int
    order: int
    generators: tuple[str, ...]

    def build(self) -> PermGroup:
        gens = [P.parse_cycles(g, self.degree) for g in self.generators]
        group = PermGroup(gens, self.degree, name=self.name, order=self.order)
        group.chain  # raises if the generators give the wrong order
        return group


def default_path() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files("multfree") / "data" / "catalog.tsv"))


def parse_catalog(text: str) -> dict[str, CatalogRecord]:
    records = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.rstrip("\n").split("\t")
        if len(fields) != 4:
            raise CatalogError(f"line {lineno}: expected 4 tab-separated fields")
        name, degree, order, gens = fields
        try:
            rec = CatalogRecord(name, int(degree), int(order), tuple(g for g in gens.split(";") if g))
        except ValueError as exc:
            raise CatalogError(f"line {lineno}: {exc}") from None
        if name in records:
            raise CatalogError(f"line {lineno}: duplicate name {name!r}")
        records[name] = rec
    return records


@lru_cache(maxsize=8)
def load(path: str | None = None) -> dict[str, CatalogRecord]:
    target = Path(path) if path else default_path()
    return parse_catalog(target.read_text())


_built: dict[tuple[str, str], PermGroup] = {}


def named_group(name: str, path: str | None = None) -> PermGroup:
    records = load(path)
    key = ALIASES.get(name, name)
    if key not in records:
        raise UnknownGroup(f"unknown group {name!r}; known: {', '.join(records)}")
    cache_key = (str(path or default_path()), key)
    if cache_key not in _built:
        _built[cache_key] = records[key].build()
    return _built[cache_key]
