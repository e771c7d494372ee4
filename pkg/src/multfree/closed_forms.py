"""Closed-form decompositions of permutation characters.

Each function transcribes one explicit decomposition for a family of
subgroups of S_n.  Summands whose parameters leave the set of partitions
(a part larger than the one before it, or a negative exponent) are dropped,
so every formula is a total function of its parameters.  Where the printed
sum needed a correction the comment says so; brute force is the arbiter.

``closed_form(spec)`` maps a GroupSpec onto the matching formula, falling
back to the LR rule for products and point extensions and to the conjugate
transform for intersections with A_n.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from .partitions import (
    MultiplicityVector,
    Partition,
    all_hooks_satisfy,
    conjugate,
    double,
    odd_promotions,
    outer_product,
    partitions_of,
)

# -- building blocks ---------------------------------------------------------


def as_partition(parts: Sequence[int]) -> Partition | None:
    """Partition from a raw part list, or None if the list is not one.

    Trailing zeros are dropped; a zero followed by a positive part, a
    negative part, or an increase makes the summand vanish.
    """
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    if any(p <= 0 for p in parts):
        return None
    if any(a < b for a, b in zip(parts, parts[1:])):
        return None
    return Partition(parts)


def ex(*pairs: tuple[int, int]) -> list[int] | None:
    """Exponent notation: ``ex((2, 3), (1, 2))`` is [2^3,1^2]."""
    out: list[int] = []
    for part, count in pairs:
        if count < 0:
            return None
        out.extend([part] * count)
    return out


def total(n: int, summands: Iterable) -> MultiplicityVector:
    counts: dict[Partition, int] = {}
    for parts in summands:
        if parts is None:
            continue
        lam = as_partition(parts)
        if lam is not None and lam.n == n:
            counts[lam] = counts.get(lam, 0) + 1
        elif lam is not None:
            raise ValueError(f"summand {lam} does not partition {n}")
    return MultiplicityVector(n, counts)


def trivial(n: int) -> MultiplicityVector:
    return MultiplicityVector(n, {Partition([n] if n else []): 1})


def alternating(n: int) -> MultiplicityVector:
    """ind from A_n: [n]+[1^n] (A_0 = S_0 and A_1 = S_1 give just [n])."""
    if n < 2:
        return trivial(n)
    return total(n, [[n], [1] * n])


def conjugate_vector(vec: MultiplicityVector) -> MultiplicityVector:
    return MultiplicityVector(vec.n, {conjugate(lam): m for lam, m in vec.items()})


def transform(vec: MultiplicityVector) -> MultiplicityVector:
    """G cap A_n from G (G not inside A_n): each lam also contributes lam'."""
    return vec + conjugate_vector(vec)


# -- products of symmetric and alternating groups ---------------------------

YOUNG_VARIANTS = ("SxS", "AxS", "SxA", "AxA", "cap_alt")


def young_pair(k: int, n: int, which: str = "SxS") -> MultiplicityVector:
    """X_k x Y_{n-k} with 2k <= n, where ``which`` names X and Y.

    ``cap_alt`` is (S_k x S_{n-k}) cap A_n.  The S x A sum runs to i = k;
    the printed upper limit n-k admits two-row shapes that Pieri's rule
    excludes.
    """
    if which not in YOUNG_VARIANTS:
        raise ValueError(f"unknown variant {which!r}")
    m = n - k
    two_row = [[n - i, i] for i in range(k + 1)]
    if which == "SxS":
        return total(n, two_row)
    if which == "AxS":
        return total(n, [[m] + [1] * k, [m + 1] + [1] * (k - 1)] + two_row)
    if which == "SxA":
        return total(n, [[k] + [1] * m, [k + 1] + [1] * (m - 1)] + two_row)
    if which == "AxA":
        extra = [
            [m] + [1] * k,
            [m + 1] + [1] * (k - 1),
            [k] + [1] * m,
            [k + 1] + [1] * (m - 1),
        ]
        columns = [ex((2, i), (1, n - 2 * i)) for i in range(k + 1)]
        return total(n, extra + two_row + columns)
    return total(
        n,
        [[n - i, i] for i in range(min(k, m) + 1)]
        + [ex((2, i), (1, n - 2 * i)) for i in range(min(k, m) + 1)],
    )


# -- S_l wr S_2 and its index-2 and index-4 subgroups -------------------------

LINEAR_LABELS = ("trivial", "sigma", "psi", "sigma_psi", "phi")


def wreath_l2(l: int) -> MultiplicityVector:
    """S_l wr S_2: sum_{i <= l/2} [2l-2i, 2i]."""
    return total(2 * l, [[2 * l - 2 * i, 2 * i] for i in range(l // 2 + 1)])


def wreath_l2_linear(l: int, label: str) -> MultiplicityVector:
    """Characters of S_2l induced from the linear characters of S_l wr S_2,
    and from the two-dimensional phi."""
    n = 2 * l
    r = range(l // 2 + 1)
    if label == "trivial":
        return wreath_l2(l)
    if label == "sigma":
        return total(n, [ex((2, 2 * i), (1, n - 4 * i)) for i in r])
    if label == "psi":
        return total(n, [[n - 2 * i - 1, 2 * i + 1] for i in r])
    if label == "sigma_psi":
        return total(n, [ex((2, 2 * i + 1), (1, n - 4 * i - 2)) for i in r])
    if label == "phi":
        return total(n, [[l + 1] + [1] * (l - 1), [l] + [1] * l])
    raise ValueError(f"unknown linear character label {label!r}")


def wreath_l2_cap_alt(l: int) -> MultiplicityVector:
    """(S_l wr S_2) cap A_2l = 1 + sigma."""
    return wreath_l2(l) + wreath_l2_linear(l, "sigma")


def sdp2(l: int) -> MultiplicityVector:
    """((S_l x S_l) cap A_2l) semidirect S_2 = 1 + sigma.psi.

    For l = 1 the block swap has sign equal to its block sign, so the group
    is all of S_2.
    """
    if l < 2:
        return wreath_l2(l)
    return wreath_l2(l) + wreath_l2_linear(l, "sigma_psi")


def alt_wreath_l2(l: int) -> MultiplicityVector:
    """A_l wr S_2 = 1 + chi + phi.

    chi is the linear character trivial on the block swap and on A_l x A_l
    but not on S_l x S_l: sigma.psi when l is odd, sigma when l is even
    (the swap is then an even permutation).
    """
    chi = "sigma_psi" if l % 2 else "sigma"
    return wreath_l2(l) + wreath_l2_linear(l, chi) + wreath_l2_linear(l, "phi")


# -- S_2 wr S_k and its subgroups ---------------------------------------------


def wreath_2k(k: int) -> MultiplicityVector:
    """S_2 wr S_k: the doubles 2lam for lam |- k."""
    return MultiplicityVector(2 * k, {double(lam): 1 for lam in partitions_of(k)})


def _distinct_partitions(k: int, largest: int | None = None) -> Iterable[tuple[int, ...]]:
    largest = k if largest is None else largest
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _distinct_partitions(k - first, first - 1):
            yield (first,) + rest


def from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> Partition:
    """Partition with Frobenius coordinates (arms | legs)."""
    d = len(arms)
    rows = [arms[i] + i + 1 for i in range(d)]
    cols = [legs[j] + j + 1 for j in range(d)]
    # rows below the Durfee square: row r has #{j : cols[j] > r} cells
    below = []
    r = d
    while True:
        length = sum(1 for c in cols if c > r)
        if not length:
            break
        below.append(length)
        r += 1
    return Partition(rows + below)


@lru_cache(maxsize=None)
def psi_k_set(k: int) -> tuple[Partition, ...]:
    """Partitions of 2k whose diagonal hooks all have width = depth + 1.

    Such a shape has Frobenius arms a_i = b_i + 1 over distinct legs b_i with
    sum (b_i + 1) = k, so the shapes correspond to partitions of k into
    distinct parts.
    """
    out = []
    for parts in _distinct_partitions(k):
        legs = [p - 1 for p in parts]
        out.append(from_frobenius([b + 1 for b in legs], legs))
    return tuple(sorted(out, reverse=True))


def psi_k_by_filter(k: int) -> tuple[Partition, ...]:
    """Same set as ``psi_k_set`` by scanning every partition of 2k."""
    return tuple(lam for lam in partitions_of(2 * k) if all_hooks_satisfy(lam, +1))


def psi_k_induced(k: int) -> MultiplicityVector:
    """ind of the block-sign character psi_k of S_2 wr S_k."""
    return MultiplicityVector(2 * k, {lam: 1 for lam in psi_k_set(k)})


def sigma_psi_k_induced(k: int) -> MultiplicityVector:
    return conjugate_vector(psi_k_induced(k))


def s2_wr_ak(k: int) -> MultiplicityVector:
    """S_2 wr A_k = 1 + psi_k."""
    return wreath_2k(k) + psi_k_induced(k)


def sdpk(k: int) -> MultiplicityVector:
    """((S_2)^k cap A_2k) semidirect S_k = 1 + sigma.psi_k."""
    return wreath_2k(k) + sigma_psi_k_induced(k)


def wreath_2k_cap_alt(k: int) -> MultiplicityVector:
    """(S_2 wr S_k) cap A_2k = 1 + sigma."""
    return transform(wreath_2k(k))


def sdpka(k: int) -> MultiplicityVector:
    """((S_2)^k cap A_2k) semidirect A_k: kernel of both sigma and psi_k,
    so 1 + sigma + psi_k + sigma.psi_k."""
    return transform(wreath_2k(k)) + psi_k_induced(k) + sigma_psi_k_induced(k)


# -- membership predicates -----------------------------------------------------


def _all_even(lam: Partition) -> bool:
    return all(p % 2 == 0 for p in lam)


def collision_witnesses(family: str, k: int) -> list[Partition]:
    """Partitions appearing twice in the decomposition for ``family`` at k."""
    if family == "S2wrAk":
        # a psi_k shape with only even parts is also a double
        return [lam for lam in psi_k_set(k) if _all_even(lam)]
    if family == "sdpk":
        return [conjugate(lam) for lam in psi_k_set(k) if _all_even(conjugate(lam))]
    if family == "wr2k_cap_alt":
        return [
            double(lam)
            for lam in partitions_of(k)
            if _all_even(conjugate(double(lam)))
        ]
    if family == "sdpka":
        return [lam for lam, m in sdpka(k).items() if m > 1]
    raise ValueError(f"no collision search for {family!r}")


MEMBERSHIP_FAMILIES = (
    "S2wrAk",
    "sdpk",
    "wr2k_cap_alt",
    "sdpka",
    "young",
    "special",
)


def mf_membership(family: str, *params, **options) -> bool:
    """Multiplicity-freeness of a family member, computed from its closed form.

    ``S2wrAk``, ``sdpk``, ``wr2k_cap_alt`` and ``sdpka`` take k and are
    decided by collision search; ``young`` takes (k, n, variant) and
    ``special`` takes (which, variant, k).
    """
    if family in ("S2wrAk", "sdpk", "wr2k_cap_alt", "sdpka"):
        (k,) = params
        return not collision_witnesses(family, k)
    if family == "young":
        k, n, variant = params
        return all(m <= 1 for _, m in young_pair(k, n, variant).items())
    if family == "special":
        which, variant, k = params
        return all(m <= 1 for _, m in special_products(which, variant, k).items())
    raise ValueError(f"unknown family {family!r}")


def sdpka_never_mf(k: int) -> bool:
    """The three index-2 overgroups of ((S_2)^k cap A_2k) semidirect A_k in
    S_2 wr S_k are never simultaneously multiplicity free."""
    return not (
        mf_membership("S2wrAk", k)
        and mf_membership("sdpk", k)
        and mf_membership("wr2k_cap_alt", k)
    )


# -- products with AGL(1,5), PGL(2,5), PGammaL(2,8) -----------------------------

SPECIAL_BASES = {
    "AGL15": (5, "[5]+[2,2,1]"),
    "PGL25": (6, "[6]+[2,2,2]"),
    "PGammaL28": (9, "[9]+[5,1^4]+[4,4,1]+[3,2^3]+[1^9]"),
}
SPECIAL_NAMES = {
    "AGL(1,5)": "AGL15",
    "PGL(2,5)": "PGL25",
    "PGammaL(2,8)": "PGammaL28",
    "PΓL(2,8)": "PGammaL28",
}
SPECIAL_VARIANTS = ("S", "A", "cap_alt")


def special_base(which: str) -> MultiplicityVector:
    return MultiplicityVector.parse(SPECIAL_BASES[which][1])


@lru_cache(maxsize=1)
def _small_cases() -> dict:
    text = (resources.files("multfree") / "data" / "small_cases.json").read_text()
    return json.loads(text)


def stored_small_case(which: str, variant: str, k: int) -> MultiplicityVector | None:
    entry = _small_cases().get(f"{which}/{variant}/{k}")
    if entry is None:
        return None
    return MultiplicityVector.parse(entry)


def _agl15(variant: str, k: int) -> MultiplicityVector:
    n = k + 5
    if variant == "S" and k == 1:
        return total(6, [[6], [5, 1], [3, 2, 1], [2, 2, 2], [2, 2, 1, 1]])
    # two-row part runs to min(k, 5): the printed bound min(k, floor((k+5)/2))
    # overcounts once k >= 7 (Pieri on [5] o [k])
    top = min(k, 5, (k + 5) // 2)
    two_row = [[n - i, i] for i in range(top + 1)]
    core = [[k + 2, 2, 1], [k + 1, 2, 2], [k + 1, 2, 1, 1], [k, 2, 2, 1]]
    if variant == "S":
        return total(n, two_row + core)
    if variant == "A":
        cols = [
            [6] + [1] * (k - 1),
            [5] + [1] * k,
            ex((3, 2), (2, 1), (1, k - 3)),
            ex((3, 2), (1, k - 1)),
            ex((3, 1), (2, 2), (1, k - 2)),
            ex((3, 1), (2, 1), (1, k)),
            ex((2, 3), (1, k - 1)),
            ex((2, 2), (1, k + 1)),
        ]
        return total(n, two_row + core + cols)
    if variant == "cap_alt":
        if k == 1:
            stored = stored_small_case("AGL15", "cap_alt", 1)
            if stored is not None:
                return stored
            return transform(_agl15("S", 1))
        columns = [ex((2, i), (1, n - 2 * i)) for i in range(top + 1)]
        tail = [
            [3, 2] + [1] * k,
            ex((3, 2), (1, k - 1)),
            [4, 2] + [1] * (k - 1),
            [4, 3] + [1] * (k - 2),
        ]
        return total(n, two_row + columns + core + tail)
    raise ValueError(variant)


def _pgl25(variant: str, k: int) -> MultiplicityVector:
    n = k + 6
    if variant == "S" and k == 1:
        return total(7, [[7], [6, 1], [3, 2, 2], [2, 2, 2, 1]])
    if variant == "cap_alt" and k == 1:
        return total(
            7,
            [[7], [1] * 7, [6, 1], [2] + [1] * 5, [3, 2, 2], [3, 3, 1], [2, 2, 2, 1], [4, 3]],
        )
    # two-row part runs to min(k, 6), see _agl15
    top = min(k, 6, (k + 6) // 2)
    two_row = [[n - i, i] for i in range(top + 1)]
    core = [[k + 2, 2, 2], [k + 1, 2, 2, 1], [k, 2, 2, 2]]
    if variant == "S":
        return total(n, two_row + core)
    if variant == "A":
        cols = [
            [7] + [1] * (k - 1),
            [6] + [1] * k,
            ex((3, 3), (1, k - 3)),
            ex((3, 2), (2, 1), (1, k - 2)),
            ex((3, 1), (2, 2), (1, k - 1)),
            ex((2, 3), (1, k)),
        ]
        return total(n, two_row + core + cols)
    if variant == "cap_alt":
        columns = [ex((2, i), (1, n - 2 * i)) for i in range(top + 1)]
        tail = [ex((3, 2), (1, k)), [4, 3] + [1] * (k - 1), [4, 4] + [1] * (k - 2)]
        return total(n, two_row + columns + core + tail)
    raise ValueError(variant)


def horizontal_strips(lam: Sequence[int], k: int) -> list[Partition]:
    """Shapes obtained by adding k boxes to lam, no two in one column."""
    lam = list(lam)
    out = []

    def rec(i: int, left: int, acc: list[int]):
        if i == len(lam):
            # the new row below lam may take up to lam[-1] boxes
            cap = lam[-1] if lam else left
            if left <= cap:
                out.append(Partition(acc + ([left] if left else [])))
            return
        cap = left if i == 0 else min(left, lam[i - 1] - lam[i])
        for a in range(cap, -1, -1):
            rec(i + 1, left - a, acc + [lam[i] + a])

    rec(0, k, [])
    return out


def vertical_strips(lam: Sequence[int], k: int) -> list[Partition]:
    """Shapes obtained by adding k boxes to lam, no two in one row."""
    return [conjugate(mu) for mu in horizontal_strips(conjugate(Partition(lam)), k)]


def _pgammal28(variant: str, k: int) -> MultiplicityVector:
    n = k + 9
    if variant == "S":
        if k <= 4:
            stored = stored_small_case("PGammaL28", "S", k)
            if stored is not None:
                return stored
            return special_products_lr("PGammaL28", "S", k)
        top = min(k, 9, (k + 9) // 2)
        summands = [[n - i, i] for i in range(top + 1)]
        summands += [[k + 1] + [1] * 8, [k] + [1] * 9]
        for i in range(5):
            summands += [
                [5 + k - i, i + 1, 1, 1, 1],
                [4 + k - i, i + 1, 1, 1, 1, 1],
                [4 + k - i, 4, i + 1],
                [3 + k - i, 4, i + 1, 1],
            ]
        # the printed [k+3,2,2,2,2] and [k+2,3,2,2,2] have k+11 boxes; the
        # horizontal strips on [3,2,2,2] give [k+1,2^4] and [k,3,2^3]
        summands += [
            [3 + k, 2, 2, 2],
            [k + 1, 2, 2, 2, 2],
            [k, 3, 2, 2, 2],
            [3 + k - 1, 3, 2, 2],
            [3 + k - 1, 2, 2, 2, 1],
            [3 + k - 2, 3, 2, 2, 1],
        ]
        return total(n, summands)
    if variant == "A":
        if k <= 10:
            stored = stored_small_case("PGammaL28", "A", k)
            if stored is not None:
                return stored
            return special_products_lr("PGammaL28", "A", k)
        # boxes added with no two in one column, then with no two in one row
        counts: dict[Partition, int] = {}
        for lam in special_base("PGammaL28"):
            for mu in horizontal_strips(lam, k) + vertical_strips(lam, k):
                counts[mu] = counts.get(mu, 0) + 1
        return MultiplicityVector(n, counts)
    if variant == "cap_alt":
        return transform(_pgammal28("S", k))
    raise ValueError(variant)


def special_products(which: str, variant: str, k: int) -> MultiplicityVector:
    """``which`` in AGL15, PGL25, PGammaL28; ``variant`` S (x S_k), A (x A_k)
    or cap_alt ((G x S_k) cap A_n)."""
    if variant not in SPECIAL_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if k < 1:
        raise ValueError("k must be positive")
    if which == "AGL15":
        return _agl15(variant, k)
    if which == "PGL25":
        return _pgl25(variant, k)
    if which == "PGammaL28":
        return _pgammal28(variant, k)
    raise ValueError(f"unknown special group {which!r}")


def special_products_lr(which: str, variant: str, k: int) -> MultiplicityVector:
    """The same decompositions from the base group by the LR rule."""
    base = special_base(which)
    if variant == "S":
        return outer_product(trivial(k), base)
    if variant == "A":
        return outer_product(alternating(k), base)
    if variant == "cap_alt":
        return transform(outer_product(trivial(k), base))
    raise ValueError(variant)


# -- point extensions ------------------------------------------------------------


def point_extensions(which: str, param: int) -> MultiplicityVector:
    """``S1_x_wr2d``: S_1 x (S_2 wr S_d); ``S1_x_wrc2``: S_1 x (S_c wr S_2)."""
    if which == "S1_x_wr2d":
        d = param
        counts: dict[Partition, int] = {}
        for lam in partitions_of(d):
            for mu in odd_promotions(lam):
                counts[mu] = counts.get(mu, 0) + 1
        return MultiplicityVector(2 * d + 1, counts)
    if which == "S1_x_wrc2":
        c = param
        summands = []
        for i in range(c // 2 + 1):
            summands += [
                [2 * c - 2 * i + 1, 2 * i],
                [2 * c - 2 * i, 2 * i + 1],
                [2 * c - 2 * i, 2 * i, 1],
            ]
        return total(2 * c + 1, summands)
    raise ValueError(f"unknown point extension {which!r}")


def s1_x_wreathl2_variants(l: int, which: str) -> MultiplicityVector:
    """S_1 x ((S_l wr S_2) cap A_2l) or S_1 x sdp2(l), by adding one box."""
    if which == "cap_alt":
        base = wreath_l2_cap_alt(l)
    elif which == "sdp2":
        base = sdp2(l)
    else:
        raise ValueError(f"unknown variant {which!r}")
    return outer_product(base, trivial(1))


# -- dispatch from GroupSpec -------------------------------------------------------


def _is_sym_or_alt(spec) -> bool:
    return spec.tag in ("S", "A")


def _sym_alt_vector(spec) -> MultiplicityVector:
    n = spec.args[0]
    return trivial(n) if spec.tag == "S" or n < 2 else alternating(n)


def _special_key(spec) -> str | None:
    if spec.tag != "named":
        return None
    from .permgroups.catalog import ALIASES

    name = ALIASES.get(spec.args[0], spec.args[0])
    return SPECIAL_NAMES.get(name)


def _young_variant(left, right) -> MultiplicityVector:
    a, b = left.args[0], right.args[0]
    tag_a = "A" if left.tag == "A" and a >= 2 else "S"
    tag_b = "A" if right.tag == "A" and b >= 2 else "S"
    if a > b:
        a, b, tag_a, tag_b = b, a, tag_b, tag_a
    return young_pair(a, a + b, f"{tag_a}x{tag_b}")


def _has_odd_element(spec, catalog) -> bool:
    from .permgroups.spec import construct

    return not construct(spec, catalog).is_even()


def closed_form(spec, catalog: str | None = None) -> MultiplicityVector | None:
    """Closed-form decomposition for ``spec`` (GroupSpec or text), or None."""
    from .permgroups.spec import GroupSpec, parse_spec

    if not isinstance(spec, GroupSpec):
        spec = parse_spec(spec)
    t, a = spec.tag, spec.args

    if t in ("S", "A"):
        return _sym_alt_vector(spec)
    if t == "wr":
        base, k, top = a
        if base.tag == "S" and k == 2 and top == "S":
            return wreath_l2(base.args[0])
        if base.tag == "S" and base.args[0] == 2:
            if top == "S" or k < 2:
                return wreath_2k(k)
            return s2_wr_ak(k)
        if base.tag == "A" and k == 2 and top == "S":
            l = base.args[0]
            return wreath_l2(l) if l < 2 else alt_wreath_l2(l)
        if base.tag == "S" and base.args[0] == 1:
            return trivial(k) if top == "S" or k < 2 else alternating(k)
        return None
    if t == "sdp2":
        return sdp2(a[0])
    if t == "sdpk":
        return sdpk(a[0])
    if t == "sdpka":
        return sdpka(a[0]) if a[0] >= 2 else None
    if t == "sdp":
        l, k = a
        if k == 2:
            return sdp2(l)
        if l == 2:
            return sdpk(k)
        return None
    if t == "named" or t in ("SD", "RD"):
        return None
    if t == "prod":
        left, right = a
        if _is_sym_or_alt(left) and _is_sym_or_alt(right):
            return _young_variant(left, right)
        for g, h in ((left, right), (right, left)):
            key = _special_key(h)
            if key and _is_sym_or_alt(g) and g.args[0] >= 1:
                k = g.args[0]
                variant = "A" if g.tag == "A" and k >= 2 else "S"
                return special_products(key, variant, k)
        lv, rv = closed_form(left, catalog), closed_form(right, catalog)
        if lv is None or rv is None:
            return None
        return outer_product(lv, rv)
    if t == "point":
        (inner,) = a
        if inner.tag == "wr" and inner.args[1:] == (2, "S") and inner.args[0].tag == "S":
            return point_extensions("S1_x_wrc2", inner.args[0].args[0])
        if inner.tag == "wr" and inner.args[2] == "S" and inner.args[0] == _S2:
            return point_extensions("S1_x_wr2d", inner.args[1])
        if inner.tag == "sdp2":
            return s1_x_wreathl2_variants(inner.args[0], "sdp2")
        if inner.tag == "alt" and inner.args[0].tag == "wr" and inner.args[0].args[1:] == (2, "S") and inner.args[0].args[0].tag == "S":
            return s1_x_wreathl2_variants(inner.args[0].args[0].args[0], "cap_alt")
        iv = closed_form(inner, catalog)
        return None if iv is None else outer_product(iv, trivial(1))
    if t == "alt":
        (inner,) = a
        if not _has_odd_element(inner, catalog):
            return closed_form(inner, catalog)
        if inner.tag == "wr" and inner.args[1:] == (2, "S") and inner.args[0].tag == "S":
            return wreath_l2_cap_alt(inner.args[0].args[0])
        if inner.tag == "wr" and inner.args[2] == "S" and inner.args[0] == _S2:
            return wreath_2k_cap_alt(inner.args[1])
        if inner.tag == "prod":
            left, right = inner.args
            if left.tag == right.tag == "S":
                k, m = sorted((left.args[0], right.args[0]))
                return young_pair(k, k + m, "cap_alt")
            for g, h in ((left, right), (right, left)):
                key = _special_key(h)
                if key and g.tag == "S" and g.args[0] >= 1:
                    return special_products(key, "cap_alt", g.args[0])
        if inner.tag == "point":
            return closed_form(_point(_alt(inner.args[0])), catalog)
        iv = closed_form(inner, catalog)
        return None if iv is None else transform(iv)
    return None


def _point(spec):
    from .permgroups.spec import GroupSpec

    return GroupSpec("point", (spec,))


def _alt(spec):
    from .permgroups.spec import GroupSpec

    return GroupSpec("alt", (spec,))


def _s2():
    from .permgroups.spec import GroupSpec

    return GroupSpec("S", (2,))


_S2 = _s2()
