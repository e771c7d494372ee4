"""Acceptance criteria 1-10.  Each test prints one ``criterion N: PASS|FAIL``
line.  Run ``python3 tests/test_acceptance.py`` for the ten lines alone.

Criterion 6 is FAIL by design: a handful of printed table entries are wrong
and the rows reproduce only the corrected values.  Its test checks that every
deviation is a documented erratum; a strict xfail asserts the printed values.
"""

from __future__ import annotations

import sys
import time
from functools import lru_cache
from math import factorial

import pytest

from multfree import closed_forms as C
from multfree import qi
from multfree.characters import character_value, class_size, dimension, hook_length_dimension, sign_of_class
from multfree.induction import alt_transform, degree_sum, induced_trivial, is_multiplicity_free
from multfree.partitions import MultiplicityVector, Partition, conjugate, outer_product, partitions_of, strict_expansions, vector
from multfree.permgroups.spec import construct, parse_spec
from multfree.tables import ERRATUM, FAIL, PASS, RECORDED, REPORT, SKIPPED, run_table
from multfree.verify import closed_form_registry, suite_closed_vs_brute, suite_cliques, suite_qi_commute

# the printed membership sets, kept here independent of the shipped data file
S2_WR_AK = [3, 4, 7, 8, 11, 12, 16, 20, 24]
SIGN_KERNEL_SK = [2, 4, 5, 6, 8, 9, 12, 13, 16, 17, 20, 24, 28, 32]

CLIQUE_BUDGET = 5_000_000


def _line(number: int, ok: bool, detail: str) -> str:
    return f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"


# -- criteria -------------------------------------------------------------------


def criterion_1():
    expected = {Partition(p) for p in ([5, 1], [4, 2], [4, 1, 1], [3, 2, 1])}
    got = strict_expansions([3], [2, 1])
    reps = 1000
    start = time.perf_counter()
    for _ in range(reps):
        strict_expansions([3], [2, 1])
    per_call = (time.perf_counter() - start) / reps
    ok = set(got) == expected and all(c == 1 for c in got.values()) and per_call < 1e-3
    return ok, f"strict expansions {' '.join(map(str, sorted(got, reverse=True)))}, {per_call * 1e6:.0f} us per call"


def criterion_2():
    res = suite_closed_vs_brute()
    return res.ok, "; ".join(res.lines)


def criterion_3():
    ok = C.psi_k_induced(6) == MultiplicityVector.parse("[4,4,4]+[5,4,2,1]+[6,3,1,1,1]+[7,1^5]")
    bad = []
    for k in (3, 4, 5, 6):
        diff = induced_trivial(construct(f"wr(S2,A{k})")).vector - C.wreath_2k(k)
        if diff != C.psi_k_induced(k):
            bad.append(k)
    ok = ok and not bad
    return ok, "psi_6 matches the worked example; S2 wr A_k minus the doubles is psi_k for k=3..6" if ok else f"mismatch at k={bad}"


def criterion_4():
    a = [k for k in range(3, 33) if C.mf_membership("S2wrAk", k)]
    b = [k for k in range(2, 33) if C.mf_membership("sdpk", k)]
    c = [k for k in range(2, 21) if C.mf_membership("wr2k_cap_alt", k)]
    d = [k for k in range(2, 33) if not C.sdpka_never_mf(k)]
    ok = a == S2_WR_AK and b == SIGN_KERNEL_SK and c == list(range(3, 21, 2)) and not d
    return ok, f"S2 wr A_k: {a}; sign kernel: {b}; cap A_2k odd k <= 20; never-MF k <= 32"


@lru_cache(maxsize=None)
def table_results(table: str):
    return tuple(run_table(table))


def criterion_5():
    rows = table_results("1")
    ok = all(r.status == PASS and r.measured.method == "brute" for r in rows)
    biggest = max(rows, key=lambda r: factorial(r.measured.n) // r.measured.index)
    order = factorial(biggest.measured.n) // biggest.measured.index
    return ok, f"{sum(r.status == PASS for r in rows)}/{len(rows)} rows by census; largest {biggest.measured.spec} of order {order}"


def criterion_6_rows():
    return [r for t in ("2", "3", "4") for r in table_results(t)]


def criterion_6():
    rows = criterion_6_rows()
    counts: dict[str, int] = {}
    for r in rows:
        counts[r.status] = counts.get(r.status, 0) + 1
    errata = [f"{r.table}.{r.row}[{','.join(f'{k}={v}' for k, v in r.params.items())}]" for r in rows if r.status == ERRATUM]
    verdicts = [f"{r.spec} {r.note}" for r in rows if r.status == RECORDED and r.spec in ("wr(S3,S5)", "wr(S5,S3)")]
    ok = set(counts) <= {PASS, REPORT, RECORDED}
    summary = ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
    detail = f"{summary}; verdicts: {'; '.join(verdicts)}"
    if errata:
        detail += f"; printed values contradicted by census at {' '.join(errata)}"
    return ok, detail


def _young_group(k, n, which):
    x = "A" if which in ("AxS", "AxA") else "S"
    y = "A" if which in ("SxA", "AxA") else "S"
    return f"prod({x}{k},{y}{n - k})"


def _young_expected(k, n, which):
    # A_1 = S_1: the A displays need the alternating factor on two or more points
    if k < 2 and which in ("AxS", "AxA"):
        which = "SxS" if which == "AxS" else "SxA"
    if n - k < 2 and which in ("SxA", "AxA"):
        which = "SxS" if which == "SxA" else "AxS"
    return C.young_pair(k, n, which), which


def _young_iff(k, n, which):
    if which == "SxS":
        return True
    if which == "AxS":
        return k != 2
    if which == "SxA":
        return n - k != 2
    return k > 2 and 2 * k <= n - 2


def criterion_7():
    bad = []
    checked = 0
    boundary = []
    for n in range(2, 13):
        for k in range(1, n // 2 + 1):
            for which in ("SxS", "AxS", "SxA", "AxA"):
                brute = induced_trivial(construct(_young_group(k, n, which))).vector
                formula, used = _young_expected(k, n, which)
                mf = is_multiplicity_free(brute)
                checked += 1
                if brute != formula or mf != _young_iff(k, n, used):
                    bad.append((k, n, which))
                if which == "AxS" and k == 2 or which == "AxA" and 2 * k == n - 1 and k > 2:
                    boundary.append(not mf)
    ok = not bad and all(boundary)
    detail = f"{checked} groups match their displays and iff-conditions; {len(boundary)} boundary cases not MF"
    return ok, detail if ok else f"mismatches {bad[:5]}"


def criterion_8():
    res = suite_qi_commute()
    vertices = len(qi.enumerate_uniform(9, 3))
    return res.ok and vertices == 280, "; ".join(res.lines)


@lru_cache(maxsize=None)
def clique_results():
    return qi.qi_max_clique(9, 3), qi.qi_max_clique(12, 3, budget=CLIQUE_BUDGET)


def criterion_9():
    r9, r12 = clique_results()
    ok = r9.exact and r9.lower == 4 and r12.lower >= 7 and (not r12.exact or r12.lower == 7)
    twelve = f"QI(12,3) exact maximum {r12.lower}" if r12.exact else f"QI(12,3) bounds [{r12.lower}, {r12.upper}]"
    return ok, f"QI(9,3) exact maximum {r9.lower}; {twelve} ({r12.nodes} nodes)"


def _property_failures() -> list[str]:
    fails = []
    for n in range(1, 15):
        for lam in partitions_of(n):
            if conjugate(conjugate(lam)) != lam:
                fails.append(f"conjugation {lam}")
        if sum(hook_length_dimension(lam) ** 2 for lam in partitions_of(n)) != factorial(n):
            fails.append(f"hook sum n={n}")
    for a in range(1, 12):
        for b in range(1, min(a, 12 - a) + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(b):
                    if outer_product(vector(mu), vector(nu)) != outer_product(vector(nu), vector(mu)):
                        fails.append(f"LR symmetry {mu} {nu}")
    for n in range(1, 10):
        ps = partitions_of(n)
        for lam in ps:
            for rho in ps:
                s = sum(class_size(mu) * character_value(lam, mu) * character_value(rho, mu) for mu in ps)
                if s != (factorial(n) if lam == rho else 0):
                    fails.append(f"orthogonality {lam} {rho}")
            for mu in ps:
                if character_value(conjugate(lam), mu) != sign_of_class(mu) * character_value(lam, mu):
                    fails.append(f"sign twist {lam} {mu}")
    # degree identity and conjugation symmetry of every registered closed form
    for text in closed_form_registry():
        spec = parse_spec(text)
        vec = C.closed_form(spec)
        if degree_sum(vec) != construct(spec).index():
            fails.append(f"degree identity {text}")
        if spec.tag == "alt" and any(vec[conjugate(lam)] != m for lam, m in vec.items()):
            group = construct(spec.args[0])
            if not group.is_even():
                fails.append(f"transform symmetry {text}")
    # transform against brute force and orbit-count bound on every verified group
    for r in [r for t in ("1", "2") for r in table_results(t)]:
        if r.measured is None or r.measured.method != "brute":
            continue
        group = construct(r.measured.spec)
        if group.order() > 2_000_000:
            continue
        dec = induced_trivial(group)
        if degree_sum(dec) != group.index():
            fails.append(f"degree identity {r.measured.spec}")
        if not group.is_even() and group.order() <= 200_000:
            t = alt_transform(dec, True)
            if any(t[conjugate(lam)] != m for lam, m in t.items()):
                fails.append(f"transform symmetry {r.measured.spec}")
            if t.vector != induced_trivial(construct(f"alt({r.measured.spec})")).vector:
                fails.append(f"transform {r.measured.spec}")
        if group.is_transitive() and is_multiplicity_free(dec):
            for k in range(1, group.n // 2 + 1):
                if group.orbit_count_on_ksets(k) > k:
                    fails.append(f"orbit bound {r.measured.spec} k={k}")
    return fails


def criterion_10():
    fails = _property_failures()
    return not fails, "all property suites hold" if not fails else "; ".join(fails[:5])


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}

# criteria expected to report FAIL, with the reason
DOCUMENTED_FAILS = {6: "printed table values contradicted by census (errata in the decisions ledger)"}


@lru_cache(maxsize=None)
def outcome(number: int):
    return CRITERIA[number]()


def _report(capsys, number: int):
    ok, detail = outcome(number)
    with capsys.disabled():
        print("\n" + _line(number, ok, detail))
    return ok


# -- tests ------------------------------------------------------------------------


@pytest.mark.parametrize("number", [1, 2, 3, 4, 5, 7, 8, 9, 10])
def test_criterion(capsys, number):
    assert _report(capsys, number)


def test_criterion_6_only_documented_errata(capsys):
    _report(capsys, 6)
    rows = criterion_6_rows()
    assert not [r.line() for r in rows if r.status in (FAIL, SKIPPED)]
    recorded = {r.spec: r.measured.mf for r in rows if r.status == RECORDED}
    assert recorded["wr(S3,S5)"] is False and recorded["wr(S5,S3)"] is True
    for r in rows:
        if r.status == ERRATUM:
            assert r.note, r.line()


@pytest.mark.xfail(strict=True, reason="printed values at the erratum rows disagree with the census")
def test_criterion_6_printed_values():
    assert all(r.status in (PASS, REPORT, RECORDED) for r in criterion_6_rows())


def test_no_undocumented_fails():
    failing = {n for n in CRITERIA if not outcome(n)[0]}
    assert failing <= set(DOCUMENTED_FAILS)


def test_young_cap_alt_exceptions():
    """(S_k x S_{n-k}) cap A_n for n <= 12: the display holds for n >= 3 and
    the non-MF cases are (2,4) and also (1,3), the trivial group in S_3."""
    non_mf = []
    for n in range(3, 13):
        for k in range(1, n // 2 + 1):
            brute = induced_trivial(construct(f"alt(prod(S{k},S{n - k}))")).vector
            assert brute == C.young_pair(k, n, "cap_alt")
            if not is_multiplicity_free(brute):
                non_mf.append((k, n))
    assert non_mf == [(1, 3), (2, 4)]


def main() -> int:
    failing = []
    for number in CRITERIA:
        ok, detail = outcome(number)
        print(_line(number, ok, detail), flush=True)
        if not ok:
            failing.append(number)
    undocumented = [n for n in failing if n not in DOCUMENTED_FAILS]
    for n in failing:
        if n in DOCUMENTED_FAILS:
            print(f"  criterion {n} FAIL is documented: {DOCUMENTED_FAILS[n]}")
    return 1 if undocumented else 0


if __name__ == "__main__":
    sys.exit(main())
