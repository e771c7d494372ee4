"""Permutation groups: Schreier-Sims stabilizer chains and cycle-type censuses.

A census maps each cycle type of S_n to the number of group elements of that
type.  It is obtained by streaming every element through products of the
chain's transversals (numpy batches, nothing stored), or exactly from
structure for symmetric and alternating groups, direct products and
intersections with A_n.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from math import factorial, prod
from typing import Callable, Iterable, Sequence

import numpy as np

from ..characters import class_size, sign_of_class
from ..partitions import Partition, partitions_of
from . import perm as P

log = logging.getLogger(__name__)

DEFAULT_CENSUS_CAP = 20_000_000
BATCH_ROWS = 1 << 18


class CensusInfeasible(RuntimeError):
    pass


class _Level:
    __slots__ = ("point", "gens", "transversal", "tested")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[tuple] = []
        self.transversal: dict[int, tuple] = {}
        self.tested: set[tuple[int, int]] = set()


class StabilizerChain:
    """Deterministic Schreier-Sims.

    ``transversal[p]`` at a level maps the base point to ``p``; group elements
    factor uniquely as ``u_m * ... * u_1`` (deepest level applied first).
    Level ``l`` carries every strong generator fixing the first ``l`` base
    points.
    """

    def __init__(self, gens: Sequence[tuple], n: int):
        self.n = n
        self.levels: list[_Level] = []
        gens = [g for g in gens if not P.is_identity(g)]
        for g in gens:
            if all(g[lv.point] == lv.point for lv in self.levels):
                self._new_level(g)
        for depth, level in enumerate(self.levels):
            level.gens = [g for g in gens if all(g[lv.point] == lv.point for lv in self.levels[:depth])]
            self._grow_orbit(level)
        i = len(self.levels) - 1
        while i >= 0:
            found = self._untested_residue(i)
            if found is None:
                i -= 1
                continue
            h, j = found
            if j == len(self.levels):
                self._new_level(h)
            for depth in range(i + 1, j + 1):
                self.levels[depth].gens.append(h)
                self._grow_orbit(self.levels[depth])
            i = j

    def _new_level(self, g: tuple) -> None:
        moved = next(x for x in range(self.n) if g[x] != x)
        level = _Level(moved)
        level.transversal[moved] = P.identity(self.n)
        self.levels.append(level)

    @staticmethod
    def _grow_orbit(level: _Level) -> None:
        queue = list(level.transversal)
        while queue:
            p = queue.pop()
            u = level.transversal[p]
            for s in level.gens:
                q = s[p]
                if q not in level.transversal:
                    level.transversal[q] = P.mul(u, s)
                    queue.append(q)

    def _untested_residue(self, i: int):
        level = self.levels[i]
        for p in list(level.transversal):
            for gi, s in enumerate(level.gens):
                if (p, gi) in level.tested:
                    continue
                level.tested.add((p, gi))
                u = level.transversal[p]
                schreier = P.mul(P.mul(u, s), P.inverse(level.transversal[s[p]]))
                if P.is_identity(schreier):
                    continue
                h, j = self.sift(schreier, start=i + 1)
                if not P.is_identity(h):
                    return h, j
        return None

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        h = g
        for j in range(start, len(self.levels)):
            level = self.levels[j]
            u = level.transversal.get(h[level.point])
            if u is None:
                return h, j
            h = P.mul(h, P.inverse(u))
        return h, len(self.levels)

    def order(self) -> int:
        return prod(len(level.transversal) for level in self.levels)

    def contains(self, g: tuple) -> bool:
        h, _ = self.sift(g)
        return P.is_identity(h)

    @property
    def base(self) -> list[int]:
        return [level.point for level in self.levels]


class PermGroup:
    """A subgroup of S_n given by generators.

    ``census_source`` is an optional exact census provider used instead of
    streaming (symmetric/alternating groups, products, intersections).
    """

    def __init__(
        self,
        gens: Iterable[tuple],
        n: int,
        *,
        name: str | None = None,
        order: int | None = None,
        census_source: Callable[["PermGroup"], Counter] | None = None,
    ):
        self.n = n
        self.gens = [tuple(g) for g in gens if not P.is_identity(tuple(g))]
        for g in self.gens:
            if len(g) != n or sorted(g) != list(range(n)):
                raise ValueError(f"generator is not a permutation of {n} points")
        self.name = name
        self._order = order
        self._chain: StabilizerChain | None = None
        self._census: Counter | None = None
        self._census_source = census_source

    def __repr__(self) -> str:
        label = self.name or f"<{len(self.gens)} generators>"
        return f"PermGroup({label}, degree={self.n})"

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.gens, self.n)
            if self._order is not None and self._chain.order() != self._order:
                raise AssertionError(
                    f"{self}: chain order {self._chain.order()} != expected {self._order}"
                )
        return self._chain

    def order(self) -> int:
        if self._order is None:
            self._order = self.chain.order()
        return self._order

    def index(self) -> int:
        return factorial(self.n) // self.order()

    def contains(self, g: tuple) -> bool:
        return self.chain.contains(tuple(g))

    def is_even(self) -> bool:
        return all(P.sign(g) == 1 for g in self.gens)

    # -- orbits and blocks

    def orbits(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            for x in orbit:
                for g in self.gens:
                    y = g[x]
                    if not seen[y]:
                        seen[y] = True
                        orbit.append(y)
            out.append(sorted(orbit))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def minimal_block(self, a: int, b: int) -> list[int]:
        """Smallest block containing ``a`` and ``b`` (union-find closure)."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        pending = [(a, b)]
        while pending:
            x, y = pending.pop()
            rx, ry = find(x), find(y)
            if rx == ry:
                continue
            parent[ry] = rx
            for g in self.gens:
                pending.append((g[x], g[y]))
        root = find(a)
        return [x for x in range(self.n) if find(x) == root]

    def is_primitive(self) -> bool:
        if not self.is_transitive():
            return False
        return all(len(self.minimal_block(0, b)) == self.n for b in range(1, self.n))

    # -- census

    def census(self, cap: int = DEFAULT_CENSUS_CAP, threads: int = 1) -> Counter:
        if self._census is None:
            if self._census_source is not None:
                self._census = self._census_source(self, cap, threads)
            else:
                self._census = stream_census(self, cap, threads)
            total = sum(self._census.values())
            if self._order is not None and total != self._order:
                raise AssertionError(f"{self}: census total {total} != order {self._order}")
            self._order = total
        return Counter(self._census)

    def census_available(self, cap: int = DEFAULT_CENSUS_CAP) -> bool:
        if self._census is not None or self._census_source is not None:
            return True
        return self.order() <= cap

    def orbit_count_on_ksets(self, k: int, cap: int = DEFAULT_CENSUS_CAP) -> int:
        if not 0 <= k <= self.n:
            raise ValueError("k must satisfy 0 <= k <= n")
        counts = self.census(cap)
        total = sum(m * fixed_ksets(mu, k) for mu, m in counts.items())
        q, r = divmod(total, sum(counts.values()))
        if r:
            raise AssertionError("Burnside count is not integral")
        return q


def fixed_ksets(mu: Sequence[int], k: int) -> int:
    """Number of k-subsets fixed by a permutation of cycle type ``mu``:
    the x^k coefficient of prod (1 + x^c)."""
    poly = [1] + [0] * k
    for c in mu:
        for d in range(k, c - 1, -1):
            poly[d] += poly[d - c]
    return poly[k]


# -- streaming --------------------------------------------------------------


def _radix(n: int) -> list[int]:
    """Mixed-radix weights: a cycle type with m_c cycles of length c has key
    sum(m_c * W_c), and 0 <= m_c <= n // c keeps keys unique."""
    weights = [0] * (n + 1)
    w = 1
    for c in range(1, n + 1):
        weights[c] = w
        w *= n // c + 1
    if w >= 2**63:
        raise CensusInfeasible(f"degree {n} too large for streamed census keys")
    return weights


def _decode_key(key: int, n: int, weights: list[int]) -> Partition:
    parts = []
    for c in range(n, 0, -1):
        m, key = divmod(key, weights[c])
        parts.extend([c] * m)
    return Partition(parts)


try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is optional
    njit = None


def _cycle_keys_numpy(batch: np.ndarray, weights: np.ndarray) -> np.ndarray:
    rows, n = batch.shape
    lengths = np.zeros((rows, n), dtype=np.int64)
    ident = np.arange(n)
    cur = batch
    for m in range(1, n + 1):
        hit = (cur == ident) & (lengths == 0)
        lengths[hit] = m
        if m % 4 == 0 and lengths.all():
            break
        cur = np.take_along_axis(batch, cur, axis=1)
    keys = np.zeros(rows, dtype=np.int64)
    for c in range(1, n + 1):
        keys += ((lengths == c).sum(axis=1) // c) * weights[c]
    return keys


if njit is not None:

    @njit(cache=True)
    def _cycle_keys_numba(batch, weights):  # pragma: no cover - compiled
        rows, n = batch.shape
        out = np.empty(rows, np.int64)
        seen = np.zeros(n, np.bool_)
        for r in range(rows):
            seen[:] = False
            key = 0
            for start in range(n):
                if not seen[start]:
                    length = 0
                    x = start
                    while not seen[x]:
                        seen[x] = True
                        x = batch[r, x]
                        length += 1
                    key += weights[length]
            out[r] = key
        return out

else:  # pragma: no cover
    _cycle_keys_numba = None


def cycle_keys(batch: np.ndarray, weights: np.ndarray, accelerated: bool = True) -> np.ndarray:
    if accelerated and _cycle_keys_numba is not None:
        return _cycle_keys_numba(batch, weights)
    return _cycle_keys_numpy(batch, weights)


def _batch_census(batch: np.ndarray, weights: np.ndarray, radix: list[int]) -> Counter:
    keys = cycle_keys(batch, weights)
    uniq, counts = np.unique(keys, return_counts=True)
    n = batch.shape[1]
    return Counter({_decode_key(int(k), n, radix): int(c) for k, c in zip(uniq, counts)})


def stream_census(group: PermGroup, cap: int = DEFAULT_CENSUS_CAP, threads: int = 1) -> Counter:
    order = group.order()
    if order > cap:
        raise CensusInfeasible(
            f"census infeasible; use closed form ({group}: order {order} > cap {cap})"
        )
    n = group.n
    if n == 0 or order == 1:
        return Counter({Partition([1] * n): 1})
    chain = group.chain
    levels = [
        np.array(list(level.transversal.values()), dtype=np.intp) for level in chain.levels
    ]
    # deepest levels are multiplied out into one block of rows
    block = np.arange(n, dtype=np.intp)[None, :]
    split = len(levels)
    while split > 0 and block.shape[0] * levels[split - 1].shape[0] <= BATCH_ROWS:
        u = levels[split - 1]
        block = u[:, block].transpose(1, 0, 2).reshape(-1, n)
        split -= 1
    outer = levels[:split]
    radix = _radix(n)
    weights = np.array(radix, dtype=np.int64)
    log.debug("streaming census of %s: block %d rows, %d outer levels", group, block.shape[0], split)

    def outer_products():
        for combo in itertools.product(*(range(len(u)) for u in reversed(outer))):
            w = np.arange(n, dtype=np.intp)
            for u, i in zip(reversed(outer), combo):
                w = u[i][w]
            yield w

    def work(w):
        return _batch_census(w[block], weights, radix)

    total: Counter = Counter()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(work, outer_products()):
                total.update(part)
    else:
        for w in outer_products():
            total.update(work(w))
    return total


# -- exact census providers --------------------------------------------------


def symmetric_census(n: int) -> Counter:
    return Counter({mu: class_size(mu) for mu in partitions_of(n)})


def alternating_census(n: int) -> Counter:
    return Counter({mu: class_size(mu) for mu in partitions_of(n) if sign_of_class(mu) == 1})


def product_census(a: Counter, b: Counter) -> Counter:
    out: Counter = Counter()
    for mu, x in a.items():
        for nu, y in b.items():
            out[Partition.from_unsorted(mu + nu)] += x * y
    return out


def even_part(census: Counter) -> Counter:
    return Counter({mu: m for mu, m in census.items() if sign_of_class(mu) == 1})
