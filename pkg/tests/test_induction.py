from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from multfree.characters import ClassFunction, class_size, decompose
from multfree.induction import (
    BRUTE_FORCE,
    CLOSED_FORM,
    Decomposition,
    NoMethodAvailable,
    alt_mf_predicate,
    alt_transform,
    cross_check,
    decompose_spec,
    degree_sum,
    has_odd_element,
    induced_trivial,
    is_multiplicity_free,
    mf_verdict,
    orbit_identity_holds,
    rank,
)
from multfree.partitions import MultiplicityVector, Partition, conjugate
from multfree.permgroups.spec import construct

SMALL = [
    "S5", "A5", "wr(S3,S2)", "wr(S2,S3)", "wr(S2,A4)", "wr(A3,S2)", "sdp2(3)", "sdpk(4)",
    "sdpka(3)", "prod(S2,S4)", "prod(A3,A4)", "point(wr(S2,S2))", "named:AGL(1,5)",
    "named:PGL(2,5)", "named:PSL(3,2)", "named:AGL(2,3)", "named:M11", "wr(S2,S4)",
    "prod(S2,named:AGL(1,5))", "alt(wr(S3,S2))", "SD(2)", "RD(2)",
]


def _self_inner_product(group):
    """<pi, pi> straight from the census, where pi(g) = [S_n:G] |G cap C| / |C|
    is the permutation character on cosets: no irreducibles involved."""
    census = group.census()
    index = Fraction(factorial(group.n), group.order())
    total = sum(m * index * m / class_size(mu) for mu, m in census.items())
    value = total / group.order()
    assert value.denominator == 1
    return int(value)


@pytest.mark.parametrize("text", SMALL)
def test_degree_identity_and_rank(text):
    g = construct(text)
    dec = induced_trivial(g)
    assert degree_sum(dec) == factorial(g.n) // g.order()
    # rank is the number of orbitals
    assert rank(dec) == _self_inner_product(g)


@pytest.mark.parametrize("text", SMALL)
def test_census_decomposition_matches_inner_products(text):
    """Independent route: the permutation character as a class function,
    decomposed by inner products with each irreducible."""
    g = construct(text)
    census = g.census()
    values = {mu: factorial(g.n) * m // (g.order() * class_size(mu)) for mu, m in census.items()}
    assert decompose(ClassFunction(g.n, values)) == induced_trivial(g).vector


@pytest.mark.parametrize("text", [s for s in SMALL if construct(s).is_transitive()])
def test_orbit_identity_and_count_bound(text):
    g = construct(text)
    dec = induced_trivial(g)
    mf = is_multiplicity_free(dec)
    for k in range(g.n // 2 + 1):
        assert orbit_identity_holds(dec, g, k)
        if mf and k:
            assert g.orbit_count_on_ksets(k) <= k


@pytest.mark.parametrize("text", ["wr(S3,S2)", "wr(S2,S3)", "prod(S2,S3)", "named:PGL(2,5)", "sdp2(3)", "point(wr(S2,S2))"])
def test_alt_transform_matches_brute_force(text):
    g = construct(text)
    assert has_odd_element(g)
    dec = induced_trivial(g)
    t = alt_transform(dec, True)
    assert t.vector == induced_trivial(construct(f"alt({text})")).vector
    # the transform is closed under conjugation
    assert all(t[conjugate(lam)] == m for lam, m in t.items())
    assert alt_mf_predicate(dec) == is_multiplicity_free(t)


def test_alt_transform_rejects_even_groups():
    dec = induced_trivial(construct("A5"))
    with pytest.raises(ValueError):
        alt_transform(dec, False)


@given(st.sampled_from(SMALL))
def test_mf_verdict_agrees(text):
    g = construct(text)
    ok, lam = mf_verdict(g)
    dec = induced_trivial(g)
    assert ok == is_multiplicity_free(dec)
    if not ok:
        assert dec[lam] > 1


def test_decompose_spec_methods():
    a = decompose_spec("wr(S3,S2)")
    assert a.provenance == CLOSED_FORM
    b = decompose_spec("wr(S3,S2)", method="brute")
    assert b.provenance == BRUTE_FORCE
    assert a.vector == b.vector == MultiplicityVector.parse("[6]+[4,2]")
    assert decompose_spec("SD(2)").provenance == BRUTE_FORCE
    with pytest.raises(NoMethodAvailable):
        decompose_spec("SD(2)", method="closed")
    with pytest.raises(NoMethodAvailable):
        decompose_spec("wr(S2,S6)", method="brute", cap=1000)
    with pytest.raises(ValueError):
        decompose_spec("S3", method="magic")


def test_cross_check_report():
    cc = cross_check("wr(S2,S4)")
    assert cc.identical
    assert cc.report().endswith("IDENTICAL")


def test_decomposition_provenance_is_checked():
    with pytest.raises(ValueError):
        Decomposition(MultiplicityVector(1, {Partition([1]): 1}), "guess")
