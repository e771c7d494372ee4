"""Verification suites: closed forms against brute force, the hook-set
membership predicates, commuting scheme matrices and QI cliques."""

from __future__ import annotations

import time
from math import factorial
from dataclasses import dataclass, field

from . import closed_forms as C
from . import qi
from .induction import cross_check, induced_trivial, rank
from .permgroups.group import DEFAULT_CENSUS_CAP
from .permgroups.spec import construct
from .tables import membership_expectations

SUITES = ("closed-vs-brute", "hook-sets", "qi-commute", "cliques")


@dataclass
class SuiteResult:
    name: str
    ok: bool = True
    lines: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, line: str) -> None:
        self.ok = False
        self.lines.append("FAIL " + line)

    def note(self, line: str) -> None:
        self.lines.append(line)

    def report(self) -> str:
        head = f"[{self.name}] {'ok' if self.ok else 'FAILED'} ({self.seconds:.1f}s)"
        return "\n".join([head] + ["  " + line for line in self.lines])


def closed_form_registry() -> list[str]:
    """Specs whose closed form is compared with brute force, each at small
    parameters with group order at most 2*10^7."""
    specs = []
    specs += [f"wr(S{l},S2)" for l in range(1, 7)]
    specs += [f"alt(wr(S{l},S2))" for l in range(2, 7)]
    specs += [f"sdp2({l})" for l in range(1, 7)]
    specs += [f"wr(A{l},S2)" for l in range(2, 7)]
    specs += [f"wr(S2,S{k})" for k in range(1, 9)]
    specs += [f"alt(wr(S2,S{k}))" for k in range(2, 9)]
    specs += [f"wr(S2,A{k})" for k in range(2, 9)]
    specs += [f"sdpk({k})" for k in range(1, 9)]
    specs += [f"sdpka({k})" for k in range(2, 9)]
    for n in range(2, 11):
        for k in range(1, n // 2 + 1):
            for x in "SA":
                for y in "SA":
                    specs.append(f"prod({x}{k},{y}{n - k})")
            specs.append(f"alt(prod(S{k},S{n - k}))")
    for name, top in (("AGL(1,5)", 9), ("PGL(2,5)", 8), ("PGammaL(2,8)", 5)):
        for k in range(1, top + 1):
            specs += [
                f"prod(S{k},named:{name})",
                f"prod(A{k},named:{name})",
                f"alt(prod(S{k},named:{name}))",
            ]
    specs += [f"point(wr(S2,S{d}))" for d in range(1, 7)]
    specs += [f"point(wr(S{c},S2))" for c in range(1, 7)]
    specs += [f"point(sdp2({l}))" for l in range(2, 7)]
    specs += [f"point(alt(wr(S{l},S2)))" for l in range(2, 7)]
    specs += [f"alt(point(wr(S{l},S2)))" for l in range(2, 7)]
    return specs


# groups without a closed form, checked against their printed (index, rank)
NO_CLOSED_FORM = {"SD(4)": (23100, 18), "RD(4)": (46200, 33), "SD(5)": (504504, 24), "wr(A5,S3)": (1009008, 46)}


def suite_closed_vs_brute(cap: int = DEFAULT_CENSUS_CAP, threads: int = 1, catalog=None, **_) -> SuiteResult:
    res = SuiteResult("closed-vs-brute")
    count = 0
    for spec in closed_form_registry():
        cc = cross_check(spec, cap, threads, catalog)
        count += 1
        if not cc.identical:
            res.fail(f"{spec}: differs at {', '.join(map(str, cc.differing))}")
    res.note(f"{count} closed forms identical to brute force")
    # the large-k closed forms for the special products agree with the LR
    # route (A_1 = S_1, so the A displays start at k = 2)
    before = res.ok
    for which in C.SPECIAL_BASES:
        for variant in C.SPECIAL_VARIANTS:
            for k in range(2 if variant == "A" else 1, 25):
                if C.special_products(which, variant, k) != C.special_products_lr(which, variant, k):
                    res.fail(f"{which} {variant} k={k}: display differs from the LR rule")
    if res.ok == before:
        res.note("special-product displays agree with the LR rule for k <= 24")
    for spec, (index, rk) in NO_CLOSED_FORM.items():
        group = construct(spec, catalog)
        dec = induced_trivial(group, cap, threads)
        got = (factorial(group.n) // group.order(), rank(dec))
        if got != (index, rk):
            res.fail(f"{spec}: index, rank {got}, expected {(index, rk)}")
    res.note(f"{len(NO_CLOSED_FORM)} groups without closed forms match their printed index and rank")
    return res


def suite_hook_sets(**_) -> SuiteResult:
    res = SuiteResult("hook-sets")
    for k in range(1, 13):
        if C.psi_k_set(k) != C.psi_k_by_filter(k):
            res.fail(f"psi_{k}: Frobenius enumeration differs from the hook filter")
    res.note("psi_k shapes from distinct parts agree with the hook filter for k <= 12")
    exp = membership_expectations()
    for family in ("S2wrAk", "sdpk"):
        e = exp[family]
        lo, hi = e["from"], e["to"]
        got = [k for k in range(lo, hi + 1) if C.mf_membership(family, k)]
        if got != e["members"]:
            res.fail(f"{family}: computed {got}, printed {e['members']}")
        else:
            res.note(f"{family}: multiplicity free exactly for k in {got} ({lo} <= k <= {hi})")
    e = exp["wr2k_cap_alt"]
    got = [k for k in range(e["from"], e["to"] + 1) if C.mf_membership("wr2k_cap_alt", k)]
    odd = [k for k in range(e["from"], e["to"] + 1) if k % 2]
    if got != odd:
        res.fail(f"wr2k_cap_alt: computed {got}, expected the odd k")
    else:
        res.note(f"wr2k_cap_alt: multiplicity free exactly for odd k ({e['from']} <= k <= {e['to']})")
    e = exp["sdpka"]
    bad = [k for k in range(e["from"], e["to"] + 1) if not C.sdpka_never_mf(k)]
    if bad:
        res.fail(f"sdpka: the three overgroups are all multiplicity free at k={bad}")
    else:
        res.note(f"sdpka: never multiplicity free by the three-way argument ({e['from']} <= k <= {e['to']})")
    direct = [k for k in range(2, 17) if C.mf_membership("sdpka", k)]
    if direct:
        res.fail(f"sdpka: direct collision search finds no repeat at k={direct}")
    return res


QI_COMMUTE_CASES = ((4, 2), (6, 3), (8, 4), (9, 3))


def suite_qi_commute(cap: int = DEFAULT_CENSUS_CAP, threads: int = 1, **_) -> SuiteResult:
    res = SuiteResult("qi-commute")
    for n, k in QI_COMMUTE_CASES:
        s = qi.scheme(n, k)
        ok, witness = qi.commuting_check(s.matrices())
        if not ok:
            res.fail(f"({n},{k}): classes {witness} do not commute")
            continue
        if not qi.partition_check(s):
            res.fail(f"({n},{k}): class matrices do not partition the complete graph")
        expected = rank(induced_trivial(construct(f"wr(S{n // k},S{k})"), cap, threads)) - 1
        classes = len(s.classes) - 1
        if classes != expected:
            res.fail(f"({n},{k}): {classes} classes, but the wreath product has rank {expected + 1}")
        res.note(f"({n},{k}): {len(s.vertices)} vertices, {classes} classes, pairwise commuting")
    return res


CLIQUE_CASES = ((4, 2, 3), (9, 3, 4), (12, 3, 7))


def suite_cliques(budget: int | None = 2_000_000, **_) -> SuiteResult:
    res = SuiteResult("cliques")
    for n, k, target in CLIQUE_CASES:
        r = qi.qi_max_clique(n, k, budget)
        if r.lower < target:
            res.fail(f"QI({n},{k}): best clique {r.lower} below {target}")
        elif r.exact and r.lower != target:
            res.fail(f"QI({n},{k}): maximum clique {r.lower}, expected {target}")
        elif r.exact:
            res.note(f"QI({n},{k}): maximum clique {r.lower} (exact, {r.nodes} nodes)")
        else:
            res.note(f"QI({n},{k}): clique bounds [{r.lower}, {r.upper}] within budget")
    return res


_RUNNERS = {
    "closed-vs-brute": suite_closed_vs_brute,
    "hook-sets": suite_hook_sets,
    "qi-commute": suite_qi_commute,
    "cliques": suite_cliques,
}


def run_suite(name: str, **options) -> list[SuiteResult]:
    names = SUITES if name == "all" else (name,)
    out = []
    for n in names:
        if n not in _RUNNERS:
            raise KeyError(f"unknown suite {n!r}; known: {', '.join(SUITES)}, all")
        start = time.perf_counter()
        r = _RUNNERS[n](**options)
        r.seconds = time.perf_counter() - start
        out.append(r)
    return out
