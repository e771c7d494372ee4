"""Uniform set partitions, meet tables, and the graphs they define.

A uniform k-partition of {0..n-1} splits the points into k cells of size
l = n/k.  The meet table of two such partitions is the k x k matrix of cell
intersection sizes; up to row and column permutations it determines the
orbit of the pair under S_n.  Each class of tables gives one graph on the
partitions, and QI(n,k) is the graph of the all-positive tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import factorial

import numpy as np

DEFAULT_VERTEX_CAP = 10_000


class VertexCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class UniformPartition:
    n: int
    k: int
    cells: tuple[tuple[int, ...], ...]  # sorted cells, ordered by minimum

    @property
    def l(self) -> int:
        return self.n // self.k

    def labels(self) -> tuple[int, ...]:
        out = [0] * self.n
        for i, cell in enumerate(self.cells):
            for x in cell:
                out[x] = i
        return tuple(out)

    def __str__(self) -> str:
        return "|".join(",".join(str(x + 1) for x in cell) for cell in self.cells)


def uniform_count(n: int, k: int) -> int:
    if k <= 0 or n % k:
        raise ValueError(f"{k} does not divide {n}")
    l = n // k
    return factorial(n) // (factorial(l) ** k * factorial(k))


def enumerate_uniform(n: int, k: int, cap: int | None = DEFAULT_VERTEX_CAP) -> list[UniformPartition]:
    """All uniform k-partitions of an n-set in a fixed order.

    The first cell always holds the smallest unused point, so each partition
    is produced once, already in canonical form.
    """
    count = uniform_count(n, k)
    if cap is not None and count > cap:
        raise VertexCapExceeded(f"{count} uniform partitions exceed the cap {cap}")
    l = n // k
    out: list[UniformPartition] = []

    def rec(remaining: tuple[int, ...], cells: list[tuple[int, ...]]):
        if not remaining:
            out.append(UniformPartition(n, k, tuple(cells)))
            return
        first, rest = remaining[0], remaining[1:]
        for others in itertools.combinations(rest, l - 1):
            cell = (first,) + others
            taken = set(others)
            rec(tuple(x for x in rest if x not in taken), cells + [cell])

    rec(tuple(range(n)), [])
    return out


def meet_table(p: UniformPartition, q: UniformPartition) -> tuple[tuple[int, ...], ...]:
    if (p.n, p.k) != (q.n, q.k):
        raise ValueError("partitions of different shape")
    return tuple(tuple(len(set(a) & set(b)) for b in q.cells) for a in p.cells)


def canonical(table) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least table (row-major) under row and column permutations.

    For a fixed column order the best row order is the sorted one, so only
    column permutations are searched.
    """
    rows = [tuple(r) for r in table]
    k = len(rows[0]) if rows else 0
    best = None
    for cols in itertools.permutations(range(k)):
        cand = tuple(sorted(tuple(r[c] for c in cols) for r in rows))
        if best is None or cand < best:
            best = cand
    return best


def transpose(table) -> tuple[tuple[int, ...], ...]:
    return tuple(zip(*table))


def is_qualitatively_independent(table) -> bool:
    return all(x > 0 for row in table for x in row)


# -- scheme matrices ------------------------------------------------------------


@dataclass
class Scheme:
    """Class index of every ordered pair of uniform partitions.

    ``classes[c]`` is the canonical meet table of class c, class 0 is the
    identity class diag(l), and ``index[a, b]`` is the class of (a, b).
    """

    n: int
    k: int
    vertices: list[UniformPartition]
    classes: list[tuple[tuple[int, ...], ...]]
    index: np.ndarray = field(repr=False)

    def matrix(self, c: int) -> np.ndarray:
        return (self.index == c).astype(np.int64)

    def matrices(self) -> list[np.ndarray]:
        """Adjacency matrices of the off-diagonal classes."""
        return [self.matrix(c) for c in range(1, len(self.classes))]


def _one_hot(vertices: list[UniformPartition], n: int, k: int) -> np.ndarray:
    x = np.zeros((len(vertices), k, n), dtype=np.float32)
    for v, p in enumerate(vertices):
        for i, cell in enumerate(p.cells):
            x[v, i, list(cell)] = 1.0
    return x


def scheme(n: int, k: int, cap: int | None = DEFAULT_VERTEX_CAP, block: int = 1024) -> Scheme:
    """Meet-table classes of all pairs, computed with one matrix product per
    table entry (exact: entries are at most l)."""
    vertices = enumerate_uniform(n, k, cap)
    l = n // k
    N = len(vertices)
    x = _one_hot(vertices, n, k)
    identity = canonical([[l if i == j else 0 for j in range(k)] for i in range(k)])
    class_of_code: dict[int, int] = {}
    classes = [identity]
    canon_id = {identity: 0}
    index = np.empty((N, N), dtype=np.int16)
    weights = (l + 1) ** np.arange(k * k, dtype=np.int64)
    for start in range(0, N, block):
        stop = min(N, start + block)
        code = np.zeros((stop - start, N), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                entry = np.rint(x[start:stop, i, :] @ x[:, j, :].T).astype(np.int64)
                code += entry * weights[i * k + j]
        uniq, inverse = np.unique(code, return_inverse=True)
        ids = np.empty(len(uniq), dtype=np.int16)
        for u, c in enumerate(uniq.tolist()):
            if c not in class_of_code:
                digits = [(c // (l + 1) ** e) % (l + 1) for e in range(k * k)]
                table = tuple(tuple(digits[i * k : (i + 1) * k]) for i in range(k))
                canon = canonical(table)
                if canon not in canon_id:
                    canon_id[canon] = len(classes)
                    classes.append(canon)
                class_of_code[c] = canon_id[canon]
            ids[u] = class_of_code[c]
        index[start:stop] = ids[inverse.reshape(code.shape)]
    return Scheme(n, k, vertices, classes, index)


def scheme_matrices(n: int, k: int, cap: int | None = DEFAULT_VERTEX_CAP) -> list[np.ndarray]:
    return scheme(n, k, cap).matrices()


def commuting_check(matrices: list[np.ndarray]):
    """``(True, None)`` if every pair commutes, else ``(False, (i, j))``."""
    for i in range(len(matrices)):
        for j in range(i + 1, len(matrices)):
            a, b = matrices[i], matrices[j]
            if not np.array_equal(a @ b, b @ a):
                return False, (i, j)
    return True, None


def partition_check(s: Scheme) -> bool:
    """The identity plus all class matrices is the all-ones matrix, each
    class matrix is symmetric, and each has constant row sums."""
    N = len(s.vertices)
    total = np.zeros((N, N), dtype=np.int64)
    for c in range(len(s.classes)):
        m = s.matrix(c)
        total += m
        sums = m.sum(axis=1)
        if not (sums == sums[0]).all():
            return False
        if not np.array_equal(m, m.T) and c:
            # a non-symmetric class pairs with its transpose class
            if canonical(transpose(s.classes[c])) == s.classes[c]:
                return False
    return bool((total == 1).all())


# -- QI graphs and cliques ---------------------------------------------------------


def qi_classes(s: Scheme) -> list[int]:
    return [c for c, t in enumerate(s.classes) if is_qualitatively_independent(t)]


def qi_graph(n: int, k: int, cap: int | None = DEFAULT_VERTEX_CAP) -> tuple[Scheme, np.ndarray]:
    """The scheme and the 0/1 adjacency matrix of QI(n,k)."""
    s = scheme(n, k, cap)
    adj = np.isin(s.index, qi_classes(s)).astype(np.int64)
    return s, adj


def edge_list(adj: np.ndarray) -> list[tuple[int, int]]:
    rows, cols = np.nonzero(np.triu(adj, 1))
    return list(zip(rows.tolist(), cols.tolist()))


def to_bitsets(adj: np.ndarray) -> list[int]:
    out = []
    for row in adj.astype(bool):
        packed = np.packbits(row, bitorder="little")
        out.append(int.from_bytes(packed.tobytes(), "little"))
    return out


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass
class CliqueResult:
    lower: int
    upper: int
    witness: list[int]
    nodes: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


class _Search:
    """Branch and bound on bitsets with a greedy colouring bound."""

    def __init__(self, nbrs: list[int], budget: int | None):
        self.nbrs = nbrs
        self.budget = budget
        self.nodes = 0
        self.best: list[int] = []
        self.abandoned = 0  # largest bound of a subproblem left unexplored

    def colour_order(self, cand: int) -> tuple[list[int], list[int]]:
        """Vertices of ``cand`` with the colour class number of each, greedy."""
        order, colours = [], []
        uncoloured = cand
        colour = 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~self.nbrs[v] & ~(1 << v)
                uncoloured &= ~(1 << v)
                order.append(v)
                colours.append(colour)
        return order, colours

    def expand(self, clique: list[int], cand: int) -> None:
        self.nodes += 1
        order, colours = self.colour_order(cand)
        for idx in range(len(order) - 1, -1, -1):
            bound = len(clique) + colours[idx]
            if bound <= len(self.best):
                return
            if self.budget is not None and self.nodes >= self.budget:
                self.abandoned = max(self.abandoned, bound)
                return
            v = order[idx]
            new = cand & self.nbrs[v]
            clique.append(v)
            if new:
                self.expand(clique, new)
            elif len(clique) > len(self.best):
                self.best = list(clique)
            clique.pop()
            cand &= ~(1 << v)


def max_clique(adj, budget: int | None = None, fixed: list[int] | None = None) -> CliqueResult:
    """Maximum clique of a graph given as a 0/1 matrix or bitset rows.

    ``fixed`` is a clique that some maximum clique is known to contain (by
    symmetry); the search runs in its common neighbourhood.  With a node
    ``budget`` the result may carry bounds only.
    """
    nbrs = adj if isinstance(adj, list) else to_bitsets(adj)
    fixed = list(fixed or [])
    cand = (1 << len(nbrs)) - 1
    for v in fixed:
        cand &= nbrs[v]
    search = _Search(nbrs, budget)
    search.best = list(fixed)
    search.expand(list(fixed), cand)
    lower = len(search.best)
    upper = max(lower, search.abandoned)
    return CliqueResult(lower, upper, sorted(search.best), search.nodes)


def qi_max_clique(n: int, k: int, budget: int | None = None, cap: int | None = DEFAULT_VERTEX_CAP) -> CliqueResult:
    """Maximum clique of QI(n,k) with symmetry reduction.

    S_n is transitive on uniform partitions, so one vertex may be fixed; if
    qualitative independence is a single meet-table class, S_n is also
    transitive on edges and a whole edge may be fixed.
    """
    s, adj = qi_graph(n, k, cap)
    nbrs = to_bitsets(adj)
    if not nbrs[0]:
        return CliqueResult(1, 1, [0], 0)
    fixed = [0]
    if len(qi_classes(s)) == 1:
        fixed.append(next(_bits(nbrs[0])))
    return max_clique(nbrs, budget, fixed)


def is_clique(adj: np.ndarray, vertices: list[int]) -> bool:
    return all(adj[a, b] for a, b in itertools.combinations(vertices, 2))
