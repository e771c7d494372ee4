from math import factorial

import pytest
from hypothesis import given, strategies as st

from multfree import closed_forms as C
from multfree.characters import dimension
from multfree.induction import degree_sum, induced_trivial
from multfree.partitions import MultiplicityVector, Partition, conjugate, partition_count, partitions_of
from multfree.permgroups.spec import construct, parse_spec
from multfree.tables import membership_expectations

V = MultiplicityVector.parse


def brute(text):
    return induced_trivial(construct(text)).vector


def test_total_drops_invalid_summands():
    assert C.as_partition([3, 0, 1]) is None
    assert C.as_partition([2, 3]) is None
    assert C.as_partition([3, 1, 0, 0]) == Partition([3, 1])
    assert C.ex((2, -1)) is None
    assert C.total(4, [[4], [2, 3], None, [3, 1]]) == V("[4]+[3,1]")
    with pytest.raises(ValueError):
        C.total(4, [[5]])


# -- Young pairs


def test_young_pair_examples():
    assert C.young_pair(2, 5) == V("[5]+[4,1]+[3,2]")
    assert C.young_pair(3, 7, "AxS") == V("[4,1,1,1]+[5,1,1]+[7]+[6,1]+[5,2]+[4,3]")
    assert C.young_pair(2, 6, "cap_alt") == V("[6]+[5,1]+[4,2]+[1^6]+[2,1^4]+[2,2,1,1]")
    with pytest.raises(ValueError):
        C.young_pair(2, 5, "AxB")


@given(st.integers(2, 12).flatmap(lambda n: st.tuples(st.integers(1, n // 2), st.just(n))), st.sampled_from(C.YOUNG_VARIANTS))
def test_young_pair_degree_identity(kn, which):
    # the A displays need an alternating factor on at least two points
    k, n = kn
    a = 1 if which in ("SxS", "SxA", "cap_alt") else 2
    b = 1 if which in ("SxS", "AxS", "cap_alt") else 2
    if (a == 2 and k < 2) or (b == 2 and n - k < 2):
        return
    order = factorial(k) * factorial(n - k) // (a * b)
    if which == "cap_alt":
        if n < 3:
            return  # S_1 x S_1 is already even
        order //= 2
    assert degree_sum(C.young_pair(k, n, which)) == factorial(n) // order


# -- S_l wr S_2 family


def test_wreath_l2_examples():
    assert C.wreath_l2(2) == V("[4]+[2,2]")
    assert C.wreath_l2(3) == V("[6]+[4,2]")
    assert C.wreath_l2(5) == V("[10]+[8,2]+[6,4]")
    assert C.wreath_l2_linear(3, "sigma") == V("[1^6]+[2,2,1,1]")
    assert C.wreath_l2_linear(4, "phi") == V("[5,1,1,1]+[4,1,1,1,1]")
    assert C.alt_wreath_l2(3) == V("[6]+[4,2]+[2,1^4]+[2,2,2]+[4,1,1]+[3,1,1,1]")
    assert C.alt_wreath_l2(3) == brute("wr(A3,S2)")


@pytest.mark.parametrize("l", range(2, 7))
def test_linear_character_degrees(l):
    # phi has degree 2, the others degree 1
    for label in C.LINEAR_LABELS:
        deg = 2 if label == "phi" else 1
        assert degree_sum(C.wreath_l2_linear(l, label)) == deg * factorial(2 * l) // (2 * factorial(l) ** 2)


# -- S_2 wr S_k family


def test_wreath_2k_examples():
    assert C.wreath_2k(2) == C.wreath_l2(2)
    assert C.wreath_2k(3) == V("[6]+[4,2]+[2,2,2]")
    assert len(C.wreath_2k(5)) == partition_count(5)


def test_psi_examples():
    assert C.psi_k_induced(3) == V("[4,1,1]+[3,3]")
    assert C.psi_k_induced(6) == V("[4,4,4]+[5,4,2,1]+[6,3,1,1,1]+[7,1^5]")
    assert C.psi_k_induced(2) == V("[3,1]")
    assert C.psi_k_induced(2) + C.wreath_2k(2) == brute("wr(S2,A2)")


@pytest.mark.parametrize("k", range(1, 13))
def test_psi_two_routes_and_conjugates(k):
    assert C.psi_k_set(k) == C.psi_k_by_filter(k)
    sp = C.sigma_psi_k_induced(k)
    assert {conjugate(lam) for lam in C.psi_k_induced(k)} == set(sp)


@pytest.mark.parametrize("k", range(2, 33))
def test_disjointness_matches_membership(k):
    disjoint = not (set(C.psi_k_induced(k)) & set(C.wreath_2k(k)))
    assert disjoint == C.mf_membership("S2wrAk", k)


def _P(*pairs):
    return C.as_partition(C.ex(*pairs))


@pytest.mark.parametrize("k", range(5, 33))
def test_printed_collision_witnesses(k):
    """Explicit repeated constituents for S_2 wr A_k and the sign-kernel
    semidirect product.  Two printed witnesses carry typos: the k = 4a+3
    exponent is 2a-6 (the printed 2a-3 overshoots 2k) and the k = 4a one
    reads (2a-6)^2."""
    a, r = divmod(k, 4)
    wa, wb = None, None
    if r == 1:
        wa = _P((2 * a + 2, 2), (2, 2 * a - 1))
        wb = _P((2 * a - 4, 2), (6, 5), (2, 2 * a - 10)) if a >= 5 else None
    elif r == 2:
        wa = _P((2 * a + 2, 2), (4, 1), (2, 2 * a - 2))
        wb = _P((2 * a, 2), (4, 3), (2, 2 * a - 4)) if a >= 2 else None
    elif r == 3:
        wa = _P((2 * a, 2), (6, 3), (2, 2 * a - 6)) if a >= 4 else (_P((6, 5)) if a == 3 else None)
        wb = _P((2 * a + 2, 2), (2, 2 * a + 1))
    else:
        wa = _P((2 * a - 6, 2), (8, 5), (2, 2 * a - 14)) if a >= 7 else None
        wb = _P((2 * a - 10, 2), (8, 7), (2, 2 * a - 18)) if a >= 9 else None
    if wa is not None:
        assert wa in C.collision_witnesses("S2wrAk", k)
        assert C.s2_wr_ak(k)[wa] == 2
    if wb is not None:
        assert wb in C.collision_witnesses("sdpk", k)
        assert C.sdpk(k)[wb] == 2


def test_membership_sets():
    exp = membership_expectations()
    for family in ("S2wrAk", "sdpk"):
        e = exp[family]
        got = [k for k in range(e["from"], e["to"] + 1) if C.mf_membership(family, k)]
        assert got == e["members"]
    assert [k for k in range(2, 21) if C.mf_membership("wr2k_cap_alt", k)] == list(range(3, 21, 2))
    assert all(C.sdpka_never_mf(k) for k in range(2, 33))
    assert not C.mf_membership("S2wrAk", 5)
    assert C.mf_membership("wr2k_cap_alt", 7)
    assert not C.mf_membership("sdpk", 10)
    with pytest.raises(ValueError):
        C.mf_membership("nope", 3)


# -- special products


def test_special_examples():
    assert C.special_products("AGL15", "S", 1) == V("[6]+[5,1]+[3,2,1]+[2,2,2]+[2,2,1,1]")
    assert C.special_products("PGL25", "S", 1) == V("[7]+[6,1]+[3,2,2]+[2,2,2,1]")
    assert C.special_products("PGL25", "cap_alt", 1) == V("[7]+[1^7]+[6,1]+[2,1^5]+[3,2,2]+[3,3,1]+[2,2,2,1]+[4,3]")


@pytest.mark.parametrize("which", list(C.SPECIAL_BASES))
@pytest.mark.parametrize("variant", C.SPECIAL_VARIANTS)
def test_special_displays_against_lr(which, variant):
    for k in range(2, 26):
        assert C.special_products(which, variant, k) == C.special_products_lr(which, variant, k)


@pytest.mark.parametrize("which", list(C.SPECIAL_BASES))
def test_special_products_are_multiplicity_free_with_symmetric(which):
    assert all(C.mf_membership("special", which, "S", k) for k in range(1, 30))


# -- point extensions


def test_point_extension_examples():
    assert C.point_extensions("S1_x_wr2d", 2) == V("[5]+[4,1]+[3,2]+[2,2,1]")
    assert C.point_extensions("S1_x_wrc2", 2) == V("[5]+[4,1]+[3,2]+[2,2,1]")
    assert C.point_extensions("S1_x_wrc2", 3) == V("[7]+[6,1]+[5,2]+[4,3]+[4,2,1]")
    assert C.point_extensions("S1_x_wrc2", 3) == brute("point(wr(S3,S2))")
    one_box = C.s1_x_wreathl2_variants(3, "cap_alt")
    assert all(m == 1 for _, m in one_box.items())
    assert one_box == brute("point(alt(wr(S3,S2)))")
    assert C.s1_x_wreathl2_variants(3, "sdp2") == brute("point(sdp2(3))")
    assert all(m == 1 for _, m in C.s1_x_wreathl2_variants(4, "cap_alt").items())


# -- dispatcher


@pytest.mark.parametrize(
    "text",
    ["wr(S4,S2)", "alt(wr(S4,S2))", "sdp2(4)", "wr(A4,S2)", "wr(S2,S5)", "alt(wr(S2,S5))", "wr(S2,A5)",
     "sdpk(5)", "sdpka(4)", "sdp(3,2)", "sdp(2,4)", "prod(A3,S5)", "prod(named:PGL(2,5),A3)",
     "point(wr(S2,S3))", "alt(point(wr(S3,S2)))", "prod(wr(S2,S2),S3)", "alt(prod(A3,A4))", "alt(A5)",
     "point(point(S3))", "prod(S1,A1)"],
)
def test_dispatcher_matches_brute_force(text):
    assert C.closed_form(parse_spec(text)) == brute(text)


def test_dispatcher_declines():
    for text in ("SD(3)", "RD(3)", "named:M12", "sdp(3,3)"):
        assert C.closed_form(parse_spec(text)) is None


@given(st.sampled_from(["wr(S{0},S2)", "alt(wr(S2,S{0}))", "prod(A{0},S{0})", "sdpk({0})", "point(sdp2({0}))"]), st.integers(2, 14))
def test_closed_form_degree_identity(template, v):
    text = template.format(v)
    vec = C.closed_form(parse_spec(text))
    assert degree_sum(vec) == construct(text).index()
    assert all(m > 0 for _, m in vec.items())
