"""GroupSpec: a small expression language naming subgroups of S_n.

    spec := atom | alt(spec) | point(spec) | prod(spec,spec) | wr(spec,S<int>) | wr(spec,A<int>)
    atom := S<int> | A<int> | sdp2(<int>) | sdpk(<int>) | sdpka(<int>) | sdp(<int>,<int>)
          | SD(<int>) | RD(<int>) | named:<identifier>

``wr(S3,S2)``, ``wr(A3,S2)`` and ``wr(S2,A5)`` are the usual wreath products;
any spec may serve as the base, e.g. ``wr(named:AGL(1,5),S2)``.  ``sdp(l,k)``
is ((S_l)^k cap A_lk) semidirect S_k; ``sdp2(l)`` is ``sdp(l,2)`` and
``sdpk(k)`` is ``sdp(2,k)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import families as F
from .catalog import named_group
from .group import PermGroup


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    tag: str  # S, A, wr, sdp, sdp2, sdpk, sdpka, SD, RD, named, alt, point, prod
    args: tuple

    def __str__(self) -> str:
        t, a = self.tag, self.args
        if t in ("S", "A"):
            return f"{t}{a[0]}"
        if t == "named":
            return f"named:{a[0]}"
        if t == "wr":
            return f"wr({a[0]},{a[2]}{a[1]})"
        if t in ("alt", "point"):
            return f"{t}({a[0]})"
        if t == "prod":
            return f"prod({a[0]},{a[1]})"
        if t == "sdp":
            return f"sdp({a[0]},{a[1]})"
        return f"{t}({a[0]})"

    @property
    def degree(self) -> int:
        t, a = self.tag, self.args
        if t in ("S", "A"):
            return a[0]
        if t == "wr":
            return a[0].degree * a[1]
        if t in ("sdp2", "sdpk", "sdpka"):
            return 2 * a[0]
        if t == "sdp":
            return a[0] * a[1]
        if t in ("SD", "RD"):
            return 3 * a[0]
        if t == "alt":
            return a[0].degree
        if t == "point":
            return a[0].degree + 1
        if t == "prod":
            return a[0].degree + a[1].degree
        return construct(self).n


_INT_ATOMS = ("sdpka", "sdpk", "sdp2", "SD", "RD")


class _Parser:
    def __init__(self, text: str):
        self.text = re.sub(r"\s+", "", text)
        self.pos = 0

    def fail(self, what: str):
        raise SpecError(f"{what} at position {self.pos} in {self.text!r}")

    def peek(self, s: str) -> bool:
        return self.text.startswith(s, self.pos)

    def expect(self, s: str) -> None:
        if not self.peek(s):
            self.fail(f"expected {s!r}")
        self.pos += len(s)

    def integer(self) -> int:
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            self.fail("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def identifier(self) -> str:
        m = re.compile(r"[A-Za-z0-9_]+").match(self.text, self.pos)
        if not m:
            self.fail("expected an identifier")
        self.pos = m.end()
        start = m.start()
        # optional balanced parenthesised suffixes, e.g. PSL(2,9) or Aut(PSL(2,9))
        while self.peek("("):
            depth = 0
            while self.pos < len(self.text):
                c = self.text[self.pos]
                depth += c == "("
                depth -= c == ")"
                self.pos += 1
                if depth == 0:
                    break
            else:
                self.fail("unbalanced parentheses in name")
        return self.text[start : self.pos]

    def spec(self) -> GroupSpec:
        for tag in ("alt", "point"):
            if self.peek(tag + "("):
                self.expect(tag + "(")
                inner = self.spec()
                self.expect(")")
                return GroupSpec(tag, (inner,))
        if self.peek("prod("):
            self.expect("prod(")
            left = self.spec()
            self.expect(",")
            right = self.spec()
            self.expect(")")
            return GroupSpec("prod", (left, right))
        if self.peek("wr("):
            self.expect("wr(")
            base = self.spec()
            self.expect(",")
            if self.peek("S") or self.peek("A"):
                top = self.text[self.pos]
                self.pos += 1
            else:
                self.fail("expected S or A for the top group")
            k = self.integer()
            self.expect(")")
            if k < 1:
                self.fail("wreath needs at least one block")
            return GroupSpec("wr", (base, k, top))
        if self.peek("sdp("):
            self.expect("sdp(")
            l = self.integer()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            if l < 1 or k < 1:
                self.fail("sdp needs positive parameters")
            return GroupSpec("sdp", (l, k))
        if self.peek("named:"):
            self.expect("named:")
            return GroupSpec("named", (self.identifier(),))
        for tag in _INT_ATOMS:
            if self.peek(tag + "("):
                self.expect(tag + "(")
                v = self.integer()
                self.expect(")")
                if v < 1:
                    self.fail(f"{tag} needs a positive parameter")
                return GroupSpec(tag, (v,))
        if self.peek("S") or self.peek("A"):
            tag = self.text[self.pos]
            self.pos += 1
            return GroupSpec(tag, (self.integer(),))
        self.fail("unrecognised group expression")


def parse_spec(text: str) -> GroupSpec:
    p = _Parser(text)
    if not p.text:
        raise SpecError("empty group spec")
    spec = p.spec()
    if p.pos != len(p.text):
        p.fail("trailing input")
    return spec


def construct(spec: GroupSpec | str, catalog: str | None = None) -> PermGroup:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    t, a = spec.tag, spec.args
    if t == "S":
        return F.symmetric(a[0])
    if t == "A":
        return F.alternating(a[0])
    if t == "wr":
        base, k, top = a
        return F.wreath(construct(base, catalog), k, top, name=str(spec))
    if t == "sdp2":
        return F.sdp2(a[0])
    if t == "sdpk":
        return F.sdpk(a[0])
    if t == "sdpka":
        return F.sdpka(a[0])
    if t == "sdp":
        return F.sdp(*a)
    if t == "SD":
        return F.sd(a[0])
    if t == "RD":
        return F.rd(a[0])
    if t == "named":
        return named_group(a[0], catalog)
    if t == "alt":
        return F.intersect_alternating(construct(a[0], catalog))
    if t == "point":
        return F.point_extension(construct(a[0], catalog))
    if t == "prod":
        return F.direct_product(construct(a[0], catalog), construct(a[1], catalog), name=str(spec))
    raise SpecError(f"unknown spec tag {t!r}")
