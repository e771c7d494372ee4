"""Irreducible characters of S_n on cycle types.

Character values come from the Murnaghan-Nakayama rule on beta-sets (abacus
bead moves).  A whole column ``chi^lam(mu)`` over every ``lam`` is built by
adding rim hooks one cycle at a time; columns are memoized by cycle type.
Inner products are exact :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import threading
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Mapping

from .partitions import MultiplicityVector, Partition, partitions_of

MAX_DEGREE = 40


class NotVirtualCharacter(ValueError):
    pass


def _cycle_type(mu) -> Partition:
    return mu if isinstance(mu, Partition) else Partition.from_unsorted(mu)


def z_value(mu) -> int:
    """Centralizer order ``prod_j j^{m_j} m_j!`` of the class ``mu``."""
    counts = Counter(_cycle_type(mu))
    return prod(j**m * factorial(m) for j, m in counts.items())


def class_size(mu) -> int:
    mu = _cycle_type(mu)
    return factorial(mu.n) // z_value(mu)


def sign_of_class(mu) -> int:
    mu = _cycle_type(mu)
    return -1 if (mu.n - len(mu)) % 2 else 1


# -- Murnaghan-Nakayama -----------------------------------------------------


def _beta(lam: tuple[int, ...], length: int) -> tuple[int, ...]:
    padded = tuple(lam) + (0,) * (length - len(lam))
    return tuple(p + length - 1 - i for i, p in enumerate(padded))


def _from_beta(beta: tuple[int, ...]) -> Partition:
    length = len(beta)
    ordered = sorted(beta, reverse=True)
    return Partition(p for p in (b - (length - 1 - i) for i, b in enumerate(ordered)) if p)


def _add_rim_hooks(column: Mapping[Partition, int], r: int) -> dict[Partition, int]:
    """Push a signed column through 'add one rim hook of length r'."""
    out: dict[Partition, int] = {}
    for lam, value in column.items():
        length = len(lam) + r
        beta = _beta(lam, length)
        beads = set(beta)
        for b in beta:
            target = b + r
            if target in beads:
                continue
            between = sum(1 for c in beta if b < c < target)
            moved = tuple(target if c == b else c for c in beta)
            nu = _from_beta(moved)
            out[nu] = out.get(nu, 0) + (-value if between % 2 else value)
    return {lam: v for lam, v in out.items() if v}


_lock = threading.Lock()


@lru_cache(maxsize=None)
def _column_cached(parts: tuple[int, ...]) -> dict[Partition, int]:
    if not parts:
        return {Partition(()): 1}
    return _add_rim_hooks(_column_cached(parts[:-1]), parts[-1])


def character_column(mu) -> dict[Partition, int]:
    """``{lam: chi^lam(mu)}`` for every lam with a nonzero value."""
    mu = _cycle_type(mu)
    if mu.n > MAX_DEGREE:
        raise ValueError(f"character memo is limited to n <= {MAX_DEGREE}")
    # ascending parts so that classes share their long runs of small cycles
    key = tuple(sorted(mu))
    with _lock:
        return _column_cached(key)


def character_value(lam, mu) -> int:
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = _cycle_type(mu)
    if lam.n != mu.n:
        raise ValueError(f"size mismatch: {lam} vs cycle type {mu}")
    return character_column(mu).get(lam, 0)


def character_value_uncached(lam, mu) -> int:
    """Plain recursive rim-hook removal, kept as an independent reference."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = _cycle_type(mu)
    if lam.n != mu.n:
        raise ValueError(f"size mismatch: {lam} vs cycle type {mu}")
    if not mu:
        return 1
    r, rest = mu[0], Partition(mu[1:])
    beta = _beta(lam, len(lam))
    total = 0
    beads = set(beta)
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        between = sum(1 for c in beta if target < c < b)
        smaller = _from_beta(tuple(target if c == b else c for c in beta))
        term = character_value_uncached(smaller, rest)
        total += -term if between % 2 else term
    return total


def dimension(lam) -> int:
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    return character_value(lam, Partition([1] * lam.n))


def hook_length_dimension(lam) -> int:
    """Degree via the hook length formula, independent of the character code."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(lam.n) // hooks


# -- class functions --------------------------------------------------------


class ClassFunction:
    """Exact values on every cycle type of n (missing types read as 0)."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Mapping):
        self.n = n
        self.values = {}
        for mu, v in values.items():
            mu = _cycle_type(mu)
            if mu.n != n:
                raise ValueError(f"cycle type {mu} is not of degree {n}")
            self.values[mu] = v

    def __call__(self, mu):
        return self.values.get(_cycle_type(mu), 0)

    @classmethod
    def irreducible(cls, lam) -> "ClassFunction":
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        return cls(lam.n, {mu: character_value(lam, mu) for mu in partitions_of(lam.n)})

    @classmethod
    def from_vector(cls, vec: MultiplicityVector) -> "ClassFunction":
        values = {}
        for mu in partitions_of(vec.n):
            column = character_column(mu)
            values[mu] = sum(m * column.get(lam, 0) for lam, m in vec.items())
        return cls(vec.n, values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and all(
            self(mu) == other(mu) for mu in partitions_of(self.n)
        )


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    if f.n != g.n:
        raise ValueError("class functions of different degree")
    total = sum(class_size(mu) * f(mu) * g(mu) for mu in partitions_of(f.n))
    return Fraction(total, factorial(f.n))


def decompose(f: ClassFunction) -> MultiplicityVector:
    entries = {}
    for lam in partitions_of(f.n):
        m = inner_product(f, ClassFunction.irreducible(lam))
        if m.denominator != 1:
            raise NotVirtualCharacter(f"not a virtual character: <f, {lam}> = {m}")
        entries[lam] = int(m)
    return MultiplicityVector(f.n, entries)
