"""Integer partitions, diagonal hooks and Littlewood-Richardson products.

Partitions are immutable tuples of weakly decreasing positive integers.  All
enumerations are emitted in reverse-lexicographic order, so ``[n]`` comes
first and ``[1^n]`` last.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([3, 1, 1])
    Partition([3,1,1])
    >>> str(Partition.parse("[2^3,1^2]"))
    '[2,2,2,1,1]'
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {list(parts)}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {list(parts)}")
        return super().__new__(cls, parts)

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``[4,2,1]`` or the exponent shorthand ``[2^3,1^2]``."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"partition must be bracketed: {text!r}")
        body = body[1:-1].strip()
        if not body:
            return cls(())
        parts: list[int] = []
        for token in body.split(","):
            m = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(\d+)\s*)?", token)
            if m is None:
                raise ValueError(f"bad partition token {token!r} in {text!r}")
            part = int(m.group(1))
            reps = int(m.group(2)) if m.group(2) is not None else 1
            parts.extend([part] * reps)
        return cls(parts)

    @property
    def n(self) -> int:
        return sum(self)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self) -> str:
        return f"Partition({self})"

    def __getnewargs__(self):
        return (tuple(self),)


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def conjugate(lam) -> Partition:
    lam = _as_partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


@lru_cache(maxsize=None)
def _partitions_tuple(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_tuple(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, starting at [n]."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _partitions_tuple(n, n)]


def partition_count(n: int) -> int:
    return len(_partitions_tuple(n, n))


# -- diagonal hooks ---------------------------------------------------------


@dataclass(frozen=True)
class DiagonalHook:
    index: int
    width: int
    depth: int


def diagonal_hooks(lam) -> list[DiagonalHook]:
    """The hooks through the diagonal cells (i, i), outermost first."""
    lam = _as_partition(lam)
    conj = conjugate(lam)
    hooks = []
    i = 0
    while i < len(lam) and lam[i] > i:
        hooks.append(DiagonalHook(i + 1, lam[i] - i, conj[i] - i))
        i += 1
    return hooks


def all_hooks_satisfy(lam, offset: int) -> bool:
    """True iff every diagonal hook has ``width == depth + offset``."""
    if offset not in (1, -1):
        raise ValueError("offset must be +1 or -1")
    return all(h.width == h.depth + offset for h in diagonal_hooks(lam))


def double(lam) -> Partition:
    return Partition(2 * p for p in _as_partition(lam))


def odd_promotions(lam) -> set[Partition]:
    """Doubles of ``lam`` with exactly one part (possibly a new trailing 1) made odd."""
    lam = _as_partition(lam)
    doubled = [2 * p for p in lam]
    bound = 2 * (lam.n + 1)
    out = set()
    for i in range(len(doubled)):
        above = doubled[i - 1] if i else bound
        if above > doubled[i]:
            promoted = list(doubled)
            promoted[i] += 1
            out.add(Partition(promoted))
    out.add(Partition(doubled + [1]))
    return out


# -- Littlewood-Richardson --------------------------------------------------


def _strips(shape: list[int], size: int, prev: list[int] | None):
    """Horizontal strips of ``size`` boxes added to ``shape``.

    ``prev`` is the per-row box count of the previous stage; when given, the
    running count of this stage through row i may not exceed the running count
    of the previous stage through row i-1 (lattice condition, checked per row).
    """
    rows = len(shape) + 1
    padded = shape + [0]
    counts = [0] * rows

    def rec(i: int, left: int, placed: int, prev_cum: int):
        if left == 0:
            yield list(counts)
            return
        if i == rows:
            return
        cap = left if i == 0 else min(left, padded[i - 1] - padded[i])
        if prev is not None:
            cap = min(cap, prev_cum - placed)
        nxt = prev_cum + (prev[i] if prev is not None and i < len(prev) else 0)
        for a in range(cap, -1, -1):
            counts[i] = a
            yield from rec(i + 1, left - a, placed + a, nxt)
        counts[i] = 0

    yield from rec(0, size, 0, 0)


def strict_expansions(mu, nu) -> Counter:
    """Multiset of shapes reachable by strict ``nu``-expansions of ``mu``."""
    mu = _as_partition(mu)
    nu = _as_partition(nu)
    result: Counter = Counter()

    def rec(stage: int, shape: list[int], prev: list[int] | None):
        if stage == len(nu):
            result[Partition.from_unsorted(shape)] += 1
            return
        for counts in _strips(shape, nu[stage], prev):
            new = [s + c for s, c in zip(shape + [0], counts)]
            while new and new[-1] == 0:
                new.pop()
            rec(stage + 1, new, counts)

    rec(0, list(mu), None)
    return result


def expansions(mu, nu) -> Iterator[tuple[Partition, tuple[tuple[int, ...], ...]]]:
    """Every ``nu``-expansion of ``mu``, strict or not.

    Yields ``(shape, labels)`` where ``labels[i]`` lists the stage labels of
    the boxes added to row i, left to right.
    """
    mu = _as_partition(mu)
    nu = _as_partition(nu)

    def rec(stage: int, shape: list[int], labels: list[list[int]]):
        if stage == len(nu):
            yield Partition.from_unsorted(shape), tuple(tuple(r) for r in labels)
            return
        for counts in _strips(shape, nu[stage], None):
            new = [s + c for s, c in zip(shape + [0], counts)]
            new_labels = [list(r) for r in labels] + [[]]
            for i, c in enumerate(counts):
                new_labels[i].extend([stage + 1] * c)
            while new and new[-1] == 0:
                new.pop()
            while len(new_labels) > len(new):
                new_labels.pop()
            yield from rec(stage + 1, new, new_labels)

    yield from rec(0, list(mu), [[] for _ in mu])


def is_lattice_reading(labels) -> bool:
    """Reading right to left along rows, top row first, every prefix has at
    least as many p's as (p+1)'s."""
    seen: Counter = Counter()
    for row in labels:
        for x in reversed(row):
            seen[x] += 1
            if x > 1 and seen[x] > seen[x - 1]:
                return False
    return True


@lru_cache(maxsize=65536)
def _lr_table(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    # enumerate from the side with fewer stages
    if len(nu) > len(mu) or (len(nu) == len(mu) and nu > mu):
        mu, nu = nu, mu
    return tuple(sorted(strict_expansions(mu, nu).items(), reverse=True))


def lr_coefficient(mu, nu, lam) -> int:
    mu, nu, lam = _as_partition(mu), _as_partition(nu), _as_partition(lam)
    if mu.n + nu.n != lam.n:
        return 0
    return dict(_lr_table(mu, nu)).get(lam, 0)


# -- multiplicity vectors ---------------------------------------------------


class MultiplicityVector:
    """Non-negative (or virtual) integer combination of irreducibles of S_n.

    Only nonzero entries are stored.  Iteration is reverse-lexicographic.
    """

    __slots__ = ("n", "_entries")

    def __init__(self, n: int, entries: Mapping | Iterable = ()):
        self.n = int(n)
        if isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = Counter(_as_partition(p) for p in entries).items()
        clean: dict[Partition, int] = {}
        for lam, m in items:
            lam = _as_partition(lam)
            if lam.n != self.n:
                raise ValueError(f"{lam} does not partition {self.n}")
            if m:
                clean[lam] = clean.get(lam, 0) + int(m)
        self._entries = {lam: clean[lam] for lam in sorted(clean, reverse=True) if clean[lam]}

    @classmethod
    def parse(cls, text: str) -> "MultiplicityVector":
        """Parse ``[4]+[2,2]`` or ``2[3,1]+[2^2]``."""
        terms = re.findall(r"(\d*)\s*(\[[^\]]*\])", text)
        if not terms:
            raise ValueError(f"no partitions in {text!r}")
        counts: Counter = Counter()
        for coeff, part in terms:
            counts[Partition.parse(part)] += int(coeff) if coeff else 1
        n = next(iter(counts)).n
        return cls(n, counts)

    @property
    def entries(self) -> dict[Partition, int]:
        return dict(self._entries)

    def __getitem__(self, lam) -> int:
        return self._entries.get(_as_partition(lam), 0)

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def items(self):
        return self._entries.items()

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiplicityVector):
            return NotImplemented
        return self.n == other.n and self._entries == other._entries

    def __hash__(self):
        return hash((self.n, tuple(self._entries.items())))

    def __add__(self, other: "MultiplicityVector") -> "MultiplicityVector":
        if self.n != other.n:
            raise ValueError("cannot add vectors over different n")
        total = Counter(self._entries)
        total.update(other._entries)
        return MultiplicityVector(self.n, total)

    def __sub__(self, other: "MultiplicityVector") -> "MultiplicityVector":
        if self.n != other.n:
            raise ValueError("cannot subtract vectors over different n")
        total = dict(self._entries)
        for lam, m in other._entries.items():
            total[lam] = total.get(lam, 0) - m
        return MultiplicityVector(self.n, total)

    def __mul__(self, scalar: int) -> "MultiplicityVector":
        return MultiplicityVector(self.n, {lam: scalar * m for lam, m in self._entries.items()})

    __rmul__ = __mul__

    def is_nonnegative(self) -> bool:
        return all(m > 0 for m in self._entries.values())

    def __str__(self) -> str:
        if not self._entries:
            return "0"
        return " + ".join(
            (f"{m}{lam}" if m != 1 else str(lam)) for lam, m in self._entries.items()
        )

    def __repr__(self) -> str:
        return f"MultiplicityVector({self.n}, {self})"


def vector(*parts, n: int | None = None) -> MultiplicityVector:
    """Shorthand: ``vector([4], [2, 2])`` is ``[4] + [2,2]``."""
    ps = [_as_partition(p) for p in parts]
    if n is None:
        if not ps:
            raise ValueError("n is required for an empty vector")
        n = ps[0].n
    return MultiplicityVector(n, ps)


def outer_product(a: MultiplicityVector, b: MultiplicityVector) -> MultiplicityVector:
    """Induction product: bilinear extension of the LR rule."""
    total: Counter = Counter()
    for mu, m in a.items():
        for nu, k in b.items():
            for lam, c in _lr_table(mu, nu):
                total[lam] += m * k * c
    return MultiplicityVector(a.n + b.n, total)
