"""Decompose permutation characters ind_G^{S_n}(1) into irreducibles.

The multiplicity of chi^lam is (1/|G|) sum_mu census(mu) chi^lam(mu), an
exact integer.  Characters are taken a whole column at a time, so one pass
over the census yields every multiplicity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial

from .characters import character_column, dimension
from .partitions import MultiplicityVector, Partition, conjugate, partitions_of
from .permgroups.group import DEFAULT_CENSUS_CAP, PermGroup

BRUTE_FORCE = "brute_force"
CLOSED_FORM = "closed_form"
TRANSFORM = "transform"
PROVENANCES = (BRUTE_FORCE, CLOSED_FORM, TRANSFORM)


class NonIntegralMultiplicity(ArithmeticError):
    """A census produced a fractional multiplicity: an internal error."""


class NoMethodAvailable(RuntimeError):
    pass


@dataclass(frozen=True)
class Decomposition:
    vector: MultiplicityVector
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    @property
    def n(self) -> int:
        return self.vector.n

    def __getitem__(self, lam) -> int:
        return self.vector[lam]

    def items(self):
        return self.vector.items()

    def __str__(self) -> str:
        return str(self.vector)


def _accumulate(census: Counter) -> dict[Partition, int]:
    total: dict[Partition, int] = {}
    for mu, count in census.items():
        for lam, chi in character_column(mu).items():
            total[lam] = total.get(lam, 0) + count * chi
    return total


def _divide(total: dict[Partition, int], order: int) -> dict[Partition, int]:
    out = {}
    for lam, s in total.items():
        m, r = divmod(s, order)
        if r:
            raise NonIntegralMultiplicity(f"multiplicity of {lam} is {s}/{order}")
        if m < 0:
            raise NonIntegralMultiplicity(f"negative multiplicity {m} for {lam}")
        if m:
            out[lam] = m
    return out


def induced_trivial(
    group: PermGroup, cap: int = DEFAULT_CENSUS_CAP, threads: int = 1
) -> Decomposition:
    """Brute-force decomposition of the permutation character of ``group``."""
    census = group.census(cap, threads)
    order = sum(census.values())
    vec = MultiplicityVector(group.n, _divide(_accumulate(census), order))
    dec = Decomposition(vec, BRUTE_FORCE)
    check_degree_identity(dec, factorial(group.n) // order)
    return dec


def multiplicity(census: Counter, lam) -> int:
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    order = sum(census.values())
    s = sum(count * character_column(mu).get(lam, 0) for mu, count in census.items())
    m, r = divmod(s, order)
    if r:
        raise NonIntegralMultiplicity(f"multiplicity of {lam} is {s}/{order}")
    return m


def mf_verdict(group: PermGroup, cap: int = DEFAULT_CENSUS_CAP, threads: int = 1):
    """Return ``(True, None)`` or ``(False, lam)`` for the first repeated lam.

    Multiplicities are taken one partition at a time in reverse-lex order
    and the scan stops at the first one above 1.
    """
    census = group.census(cap, threads)
    for lam in partitions_of(group.n):
        if multiplicity(census, lam) > 1:
            return False, lam
    return True, None


def alt_transform(dec: Decomposition, group_not_in_alternating: bool) -> Decomposition:
    """Decomposition for G cap A_n from that of G, when G is not inside A_n."""
    if not group_not_in_alternating:
        raise ValueError("the transform applies only to groups with odd elements")
    out: Counter = Counter()
    for lam, m in dec.items():
        out[lam] += m
        out[conjugate(lam)] += m
    return Decomposition(MultiplicityVector(dec.n, out), TRANSFORM)


def is_multiplicity_free(dec: Decomposition | MultiplicityVector) -> bool:
    return all(m <= 1 for _, m in dec.items())


def rank(dec: Decomposition | MultiplicityVector) -> int:
    return sum(m * m for _, m in dec.items())


def degree_sum(dec: Decomposition | MultiplicityVector) -> int:
    return sum(m * dimension(lam) for lam, m in dec.items())


def check_degree_identity(dec: Decomposition | MultiplicityVector, index: int) -> None:
    got = degree_sum(dec)
    if got != index:
        raise AssertionError(f"degree identity fails: sum m*dim = {got}, index = {index}")


def orbit_identity_holds(dec: Decomposition | MultiplicityVector, group: PermGroup, k: int) -> bool:
    """sum_{i<=k} m[n-i,i] equals the number of orbits on k-subsets (2k <= n)."""
    n = group.n
    if 2 * k > n:
        raise ValueError("need 2k <= n")
    two_row = sum(dec[Partition([n - i, i] if i else [n])] for i in range(k + 1))
    return two_row == group.orbit_count_on_ksets(k)


def has_odd_element(group: PermGroup) -> bool:
    return not group.is_even()


def alt_mf_predicate(dec: Decomposition | MultiplicityVector) -> bool:
    """Predicted verdict for G cap A_n: G multiplicity free and no lam with
    both lam and its conjugate present (a self-conjugate lam counts as a pair)."""
    if not is_multiplicity_free(dec):
        return False
    return all(lam != conjugate(lam) and dec[conjugate(lam)] == 0 for lam, _ in dec.items())


# -- spec-level entry points -------------------------------------------------


def brute_force(spec, cap: int = DEFAULT_CENSUS_CAP, threads: int = 1, catalog=None) -> Decomposition:
    from .permgroups.spec import construct

    return induced_trivial(construct(spec, catalog), cap, threads)


def decompose_spec(
    spec,
    method: str = "auto",
    cap: int = DEFAULT_CENSUS_CAP,
    threads: int = 1,
    catalog=None,
) -> Decomposition:
    """``method`` is ``auto`` (closed form first), ``closed`` or ``brute``."""
    from .closed_forms import closed_form
    from .permgroups.group import CensusInfeasible

    if method not in ("auto", "closed", "brute"):
        raise ValueError(f"unknown method {method!r}")
    if method in ("auto", "closed"):
        vec = closed_form(spec, catalog)
        if vec is not None:
            return Decomposition(vec, CLOSED_FORM)
        if method == "closed":
            raise NoMethodAvailable(f"no closed form for {spec}")
    try:
        return brute_force(spec, cap, threads, catalog)
    except CensusInfeasible as exc:
        raise NoMethodAvailable(str(exc)) from None


@dataclass(frozen=True)
class CrossCheck:
    spec: str
    closed: MultiplicityVector
    brute: MultiplicityVector

    @property
    def identical(self) -> bool:
        return self.closed == self.brute

    @property
    def differing(self) -> list[Partition]:
        keys = set(self.closed) | set(self.brute)
        return sorted((lam for lam in keys if self.closed[lam] != self.brute[lam]), reverse=True)

    def report(self) -> str:
        keys = sorted(set(self.closed) | set(self.brute), reverse=True)
        lines = [f"{lam}\t{self.closed[lam]}\t{self.brute[lam]}" for lam in keys]
        lines.append("IDENTICAL" if self.identical else "MISMATCH")
        return "\n".join(lines)


def cross_check(spec, cap: int = DEFAULT_CENSUS_CAP, threads: int = 1, catalog=None) -> CrossCheck:
    from .closed_forms import closed_form
    from .permgroups.spec import construct, parse_spec

    parsed = parse_spec(spec) if isinstance(spec, str) else spec
    closed = closed_form(parsed, catalog)
    group = construct(parsed, catalog)
    if closed is None or not group.census_available(cap):
        raise NoMethodAvailable(f"cross-check needs both a closed form and a census for {parsed}")
    brute = induced_trivial(group, cap, threads).vector
    return CrossCheck(str(parsed), closed, brute)

