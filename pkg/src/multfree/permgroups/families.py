"""Constructors for the subgroup families of S_n used throughout.

Wreath products are labelled block-major: block b (0-based) occupies points
b*l .. b*l + l - 1.  Subgroups cut out by sign conditions are built from
explicit generator sets and checked against their expected order.
"""

from __future__ import annotations

from math import factorial

from . import perm as P
from .group import (
    PermGroup,
    alternating_census,
    even_part,
    product_census,
    symmetric_census,
)


def _sym_gens(points: list[int], n: int) -> list[tuple]:
    if len(points) < 2:
        return []
    return [
        P.from_cycles([tuple(points[:2])], n),
        P.from_cycles([tuple(points)], n),
    ]


def _alt_gens(points: list[int], n: int) -> list[tuple]:
    # 3-cycles (p0,p1,pi) generate A_m
    if len(points) < 3:
        return []
    return [P.from_cycles([(points[0], points[1], p)], n) for p in points[2:]]


def symmetric(n: int) -> PermGroup:
    return PermGroup(
        _sym_gens(list(range(n)), n),
        n,
        name=f"S{n}",
        order=factorial(n),
        census_source=lambda g, cap, threads: symmetric_census(n),
    )


def alternating(n: int) -> PermGroup:
    return PermGroup(
        _alt_gens(list(range(n)), n),
        n,
        name=f"A{n}",
        order=max(factorial(n) // 2, 1),
        census_source=lambda g, cap, threads: alternating_census(n),
    )


def trivial(n: int) -> PermGroup:
    return PermGroup([], n, name=f"1_{n}", order=1)


def direct_product(left: PermGroup, right: PermGroup, name: str | None = None) -> PermGroup:
    """Left factor on points 0..a-1, right factor on a..a+b-1."""
    n = left.n + right.n
    gens = [P.shift(g, 0, n) for g in left.gens] + [P.shift(g, left.n, n) for g in right.gens]

    def source(group, cap, threads):
        return product_census(left.census(cap, threads), right.census(cap, threads))

    return PermGroup(
        gens,
        n,
        name=name or f"{left.name}x{right.name}",
        order=left.order() * right.order(),
        census_source=source,
    )


def point_extension(group: PermGroup) -> PermGroup:
    """S_1 x G with the new fixed point labelled last."""
    return direct_product(group, trivial(1), name=f"point({group.name})")


def intersect_alternating(group: PermGroup) -> PermGroup:
    """G intersected with A_n, via Schreier generators for the index-2 subgroup."""
    odd = [g for g in group.gens if P.sign(g) == -1]
    if not odd:
        return group
    t = odd[0]
    t_inv = P.inverse(t)
    gens = []
    for g in group.gens:
        if P.sign(g) == 1:
            gens.append(g)
            gens.append(P.mul(P.mul(t, g), t_inv))
        else:
            gens.append(P.mul(g, t_inv))
            gens.append(P.mul(t, g))

    def source(sub, cap, threads):
        return even_part(group.census(cap, threads))

    return PermGroup(
        gens,
        group.n,
        name=f"alt({group.name})",
        order=group.order() // 2,
        census_source=source,
    )


def _block(b: int, size: int) -> list[int]:
    return list(range(b * size, (b + 1) * size))


def _block_perm(sigma: tuple, size: int, n: int) -> tuple:
    """Permute blocks pointwise: block b goes to block sigma[b]."""
    img = list(range(n))
    for b, c in enumerate(sigma):
        for i in range(size):
            img[b * size + i] = c * size + i
    return tuple(img)


def _top_gens(k: int, top: str) -> list[tuple]:
    if top == "S":
        return _sym_gens(list(range(k)), k)
    if top == "A":
        return _alt_gens(list(range(k)), k)
    raise ValueError(f"unknown top group {top!r}")


def _top_order(k: int, top: str) -> int:
    return factorial(k) if top == "S" else max(factorial(k) // 2, 1)


def wreath(base: PermGroup, k: int, top: str = "S", name: str | None = None) -> PermGroup:
    """base wr S_k (or A_k): base acting on every block, top permuting blocks."""
    size = base.n
    n = size * k
    gens = []
    for b in range(k):
        gens.extend(P.shift(g, b * size, n) for g in base.gens)
    gens.extend(_block_perm(s, size, n) for s in _top_gens(k, top))
    return PermGroup(
        gens,
        n,
        name=name or f"wr({base.name},{top}{k})",
        order=base.order() ** k * _top_order(k, top),
    )


def wreath_sym(l: int, k: int, top: str = "S") -> PermGroup:
    return wreath(symmetric(l), k, top, name=f"wr(S{l},{top}{k})")


def wreath_alt(l: int, k: int) -> PermGroup:
    return wreath(alternating(l), k, "S", name=f"wr(A{l},S{k})")


def _block_sign_kernel(l: int, k: int, top: str, name: str) -> PermGroup:
    """Elements of S_l wr S_k (or A_k) whose point sign equals their block sign.

    Base generators are even products of two in-block transpositions; each
    block permutation whose sign disagrees with its block sign is corrected by
    the transposition (1,2) in the first block.
    """
    n = l * k
    gens = []
    for b in range(k):
        gens.extend(_alt_gens(_block(b, l), n))
    if l >= 2:
        t0 = P.from_cycles([(0, 1)], n)
        for b in range(1, k):
            p = b * l
            gens.append(P.from_cycles([(0, 1), (p, p + 1)], n))
    for s in _top_gens(k, top):
        g = _block_perm(s, l, n)
        if l >= 2 and P.sign(g) != P.sign(s):
            g = P.mul(g, t0)
        gens.append(g)
    base_order = factorial(l) ** k // (2 if l >= 2 else 1)
    return PermGroup(gens, n, name=name, order=base_order * _top_order(k, top))


def sdp2(l: int) -> PermGroup:
    """((S_l x S_l) cap A_2l) semidirect S_2, the kernel of sign * block-sign."""
    return _block_sign_kernel(l, 2, "S", f"sdp2({l})")


def sdpk(k: int) -> PermGroup:
    """((S_2)^k cap A_2k) semidirect S_k."""
    return _block_sign_kernel(2, k, "S", f"sdpk({k})")


def sdp(l: int, k: int) -> PermGroup:
    """((S_l)^k cap A_lk) semidirect S_k, the kernel of sign * block-sign."""
    return _block_sign_kernel(l, k, "S", f"sdp({l},{k})")


def sdpka(k: int) -> PermGroup:
    """((S_2)^k cap A_2k) semidirect A_k."""
    return _block_sign_kernel(2, k, "A", f"sdpka({k})")


def _diagonal_sign_base(l: int) -> tuple[list[tuple], tuple | None]:
    n = 3 * l
    gens = []
    for b in range(3):
        gens.extend(_alt_gens(_block(b, l), n))
    if l < 2:
        return gens, None
    diag = P.from_cycles([(b * l, b * l + 1) for b in range(3)], n)
    return gens, diag


def sd(l: int) -> PermGroup:
    """SD_l: triples of equal sign in S_l^3, extended by S_3 on the blocks."""
    n = 3 * l
    gens, diag = _diagonal_sign_base(l)
    if diag is not None:
        gens.append(diag)
    gens.extend(_block_perm(s, l, n) for s in _top_gens(3, "S"))
    base = (factorial(l) // 2) ** 3 * 2 if l >= 2 else 1
    return PermGroup(gens, n, name=f"SD({l})", order=base * 6)


def rd(l: int) -> PermGroup:
    """RD_l: elements (a,b,c:pi) of S_l wr S_3 with sgn pi = sgn a = sgn b = sgn c."""
    n = 3 * l
    gens, diag = _diagonal_sign_base(l)
    swap = _block_perm((1, 0, 2), l, n)
    rot = _block_perm((1, 2, 0), l, n)
    gens.append(rot)
    if diag is not None:
        gens.append(P.mul(diag, swap))
        base = (factorial(l) // 2) ** 3
        order = base * 6
    else:
        order = 3
    return PermGroup(gens, n, name=f"RD({l})", order=order)
