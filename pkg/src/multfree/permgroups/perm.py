"""Permutations as 0-based image tuples, with 1-based cycle notation for I/O.

Products compose left to right: ``mul(p, q)`` applies ``p`` first.
"""

from __future__ import annotations

import re

Perm = tuple  # image tuple: p[i] is the image of point i


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def power(p: Perm, e: int) -> Perm:
    result = identity(len(p))
    for _ in range(e):
        result = mul(result, p)
    return result


def cycles(p: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def sign(p: Perm) -> int:
    return -1 if (len(p) - len(cycles(p))) % 2 else 1


def from_cycles(cycs, n: int) -> Perm:
    """Build from 0-based cycles."""
    img = list(range(n))
    for cyc in cycs:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return tuple(img)


def parse_cycles(text: str, n: int) -> Perm:
    """Parse ``(1,2,3)(4,5)`` (1-based) on ``n`` points; ``()`` is the identity."""
    text = text.strip()
    if not re.fullmatch(r"(\(\s*(\d+\s*(,\s*\d+\s*)*)?\))*", text.replace(" ", "")):
        raise ValueError(f"bad cycle notation: {text!r}")
    img = list(range(n))
    seen: set[int] = set()
    for body in re.findall(r"\(([^)]*)\)", text):
        if not body.strip():
            continue
        pts = [int(x) - 1 for x in body.split(",")]
        if any(p < 0 or p >= n for p in pts) or seen.intersection(pts) or len(set(pts)) != len(pts):
            raise ValueError(f"bad cycle ({body}) on {n} points")
        seen.update(pts)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


def format_cycles(p: Perm) -> str:
    parts = ["(" + ",".join(str(x + 1) for x in c) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"


def shift(p: Perm, offset: int, n: int) -> Perm:
    """Embed ``p`` on points ``offset .. offset+len(p)-1`` of ``n`` points."""
    img = list(range(n))
    for i, j in enumerate(p):
        img[offset + i] = offset + j
    return tuple(img)
