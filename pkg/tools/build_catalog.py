"""Regenerate src/multfree/data/catalog.tsv from standard constructions.

Affine and projective groups act on finite fields / projective lines built
here; the Mathieu groups use the usual generators, and M11 on 12 points is the
action of M11 on the cosets of a subgroup of order 660.  Every record is
checked for order before it is written.

    python tools/build_catalog.py > src/multfree/data/catalog.tsv
"""

from __future__ import annotations

import itertools
import random
import sys

from multfree.permgroups import perm as P
from multfree.permgroups.group import PermGroup


class GF:
    """GF(p^k) with elements encoded as ints 0..q-1 (base-p digits)."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p, self.k, self.q = p, k, p**k
        self.modulus = modulus  # monic, low degree first, length k+1
        self.elements = list(range(self.q))

    def _vec(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def _int(self, v) -> int:
        return sum(c * self.p**i for i, c in enumerate(v))

    def add(self, a: int, b: int) -> int:
        return self._int([(x + y) % self.p for x, y in zip(self._vec(a), self._vec(b))])

    def neg(self, a: int) -> int:
        return self._int([(-x) % self.p for x in self._vec(a)])

    def mul(self, a: int, b: int) -> int:
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(self._vec(a)):
            for j, y in enumerate(self._vec(b)):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for d in range(len(prod) - 1, self.k - 1, -1):
            c = prod[d]
            if c:
                for i in range(self.k + 1):
                    prod[d - self.k + i] = (prod[d - self.k + i] - c * self.modulus[i]) % self.p
        return self._int(prod[: self.k])

    def inv(self, a: int) -> int:
        return next(b for b in self.elements if self.mul(a, b) == 1)

    def power(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def primitive(self) -> int:
        for g in self.elements[1:]:
            if len({self.power(g, e) for e in range(1, self.q)}) == self.q - 1:
                return g
        raise AssertionError


def perm_from_map(points, f) -> tuple:
    index = {pt: i for i, pt in enumerate(points)}
    return tuple(index[f(pt)] for pt in points)


INF = "inf"


def projective_line(F: GF):
    return list(F.elements) + [INF]


def mobius(F: GF, a, b, c, d):
    """x -> (a x + b) / (c x + d) on the projective line."""

    def f(x):
        if x == INF:
            return INF if c == 0 else F.mul(a, F.inv(c))
        num = F.add(F.mul(a, x), b)
        den = F.add(F.mul(c, x), d)
        if den == 0:
            return INF
        return F.mul(num, F.inv(den))

    return f


def frobenius(F: GF):
    def f(x):
        return x if x == INF else F.power(x, F.p)

    return f


def affine_1d(F: GF, frob: bool = False):
    pts = F.elements
    g = F.primitive()
    gens = [
        perm_from_map(pts, lambda x: F.add(x, 1)),
        perm_from_map(pts, lambda x: F.mul(g, x)),
    ]
    if frob:
        gens.append(perm_from_map(pts, frobenius(F)))
    return gens


def projective(F: GF, kind: str):
    pts = projective_line(F)
    g = F.primitive()
    scale = F.mul(g, g) if kind == "PSL" else g
    gens = [
        perm_from_map(pts, mobius(F, 1, 1, 0, 1)),
        perm_from_map(pts, mobius(F, scale, 0, 0, 1)),
        perm_from_map(pts, mobius(F, 0, F.neg(1), 1, 0)),
    ]
    if kind == "PGammaL":
        gens.append(perm_from_map(pts, frobenius(F)))
    return gens


def gl_action(p: int, dim: int, affine: bool):
    """GL(dim,p) on nonzero vectors, or AGL(dim,p) on all vectors."""
    vecs = [v for v in itertools.product(range(p), repeat=dim)]
    pts = vecs if affine else [v for v in vecs if any(v)]
    mats = []
    # elementary transvection and a cycling permutation matrix, plus a scalar generator
    t = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    t[0][1] = 1
    mats.append(t)
    c = [[1 if j == (i + 1) % dim else 0 for j in range(dim)] for i in range(dim)]
    mats.append(c)
    if p > 2:
        d = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
        d[0][0] = 2
        mats.append(d)

    def apply(m):
        return lambda v: tuple(sum(m[i][j] * v[j] for j in range(dim)) % p for i in range(dim))

    gens = [perm_from_map(pts, apply(m)) for m in mats]
    if affine:
        e = tuple(1 if i == 0 else 0 for i in range(dim))
        gens.append(perm_from_map(pts, lambda v: tuple((a + b) % p for a, b in zip(v, e))))
    return gens


def m11_on_12(m11_gens):
    """M11 acting on the 12 cosets of a subgroup of order 660."""
    rng = random.Random(11)
    group = PermGroup(m11_gens, 11)
    elements = enumerate_elements(group)
    while True:
        a, b = rng.choice(elements), rng.choice(elements)
        if PermGroup([a, b], 11).order() == 660:
            break
    sub = set(enumerate_elements(PermGroup([a, b], 11)))
    coset_of = {}
    reps = []
    for g in elements:
        if g in coset_of:
            continue
        idx = len(reps)
        reps.append(g)
        for h in sub:
            coset_of[P.mul(h, g)] = idx
    return [tuple(coset_of[P.mul(r, s)] for r in reps) for s in m11_gens]


def enumerate_elements(group: PermGroup) -> list[tuple]:
    out = [P.identity(group.n)]
    for level in reversed(group.chain.levels):
        out = [P.mul(x, u) for x in out for u in level.transversal.values()]
    return out


def records():
    f5 = GF(5, 1, (0, 1))
    f7 = GF(7, 1, (0, 1))
    f8 = GF(2, 3, (1, 1, 0, 1))  # x^3 + x + 1
    f9 = GF(3, 2, (1, 0, 1))  # x^2 + 1 over GF(3) is irreducible
    m11 = [
        P.parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11),
        P.parse_cycles("(3,7,11,8)(4,10,5,6)", 11),
    ]
    m12 = [
        P.parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 12),
        P.parse_cycles("(3,7,11,8)(4,10,5,6)", 12),
        P.parse_cycles("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12),
    ]
    yield "AGL(1,5)", 5, 20, affine_1d(f5)
    yield "PSL(2,5)", 6, 60, projective(f5, "PSL")
    yield "PGL(2,5)", 6, 120, projective(f5, "PGL")
    yield "AGL(1,7)", 7, 42, affine_1d(f7)
    yield "PSL(3,2)", 7, 168, gl_action(2, 3, affine=False)
    yield "AGammaL(1,8)", 8, 168, affine_1d(f8, frob=True)
    yield "PGL(2,7)", 8, 336, projective(f7, "PGL")
    yield "AGL(3,2)", 8, 1344, gl_action(2, 3, affine=True)
    yield "AGL(2,3)", 9, 432, gl_action(3, 2, affine=True)
    yield "PGL(2,8)", 9, 504, projective(f8, "PGL")
    yield "PGammaL(2,8)", 9, 1512, projective(f8, "PGammaL")
    yield "PSL(2,9)", 10, 360, projective(f9, "PSL")
    yield "PGammaL(2,9)", 10, 1440, projective(f9, "PGammaL")
    yield "M11", 11, 7920, m11
    yield "M11(12)", 12, 7920, m11_on_12(m11)
    yield "M12", 12, 95040, m12


def main() -> None:
    out = sys.stdout
    out.write("# name\tdegree\torder\tgenerators (1-based cycle notation)\n")
    for name, degree, order, gens in records():
        got = PermGroup(gens, degree).order()
        if got != order:
            raise SystemExit(f"{name}: constructed order {got}, expected {order}")
        out.write(f"{name}\t{degree}\t{order}\t{';'.join(P.format_cycles(g) for g in gens)}\n")


if __name__ == "__main__":
    main()
