from zlat.lattice import parse_lattice_expr
from zlat.stability import (
    gauss_reduce_binary,
    genus_tag,
    invariants,
    isomorphic_in_genus,
    miranda_morrison_stable,
    nikulin_stable,
    small_rank_stable,
    stability_certificate,
)


def L(expr):
    return parse_lattice_expr(expr)


def test_nikulin():
    assert nikulin_stable(L("U+3A2"))
    assert not nikulin_stable(L("<6>"))  # definite, rank 1
    assert not nikulin_stable(L("U(3)"))  # r_3 = r = 2
    assert nikulin_stable(L("U(2)"))  # r_2 = r = 2 but discr2 = u2
    assert nikulin_stable(L("U+2<-2>"))


def test_miranda_morrison():
    assert miranda_morrison_stable(L("U(3)+A1"))
    assert miranda_morrison_stable(L("U+3A1"))
    assert not miranda_morrison_stable(L("<6>+2<-6>"))  # r2 = r3 = r = 3
    assert not miranda_morrison_stable(L("U(2)"))  # rank 2
    assert miranda_morrison_stable(L("U(3)+D4"))


def test_small_rank():
    assert small_rank_stable(L("U(6)"))  # divide by 6 -> U
    assert small_rank_stable(L("<2>+3<-2>"))  # divide by 2 -> odd unimodular hyperbolic
    assert small_rank_stable(L("<2>+<-6>"))  # halve, then |det| = 3 binary reduction
    assert small_rank_stable(L("<6>+<-2>"))
    assert small_rank_stable(L("<6>+3<-6>"))  # divide by 6
    assert small_rank_stable(L("<6>"))  # rank 1
    assert not small_rank_stable(L("U+3A2"))  # no divisibility; nikulin's job


def test_gauss_reduction_lands_diagonal():
    # indefinite |det| 3 forms land on <+-1>+<-+3> with b = 0 ("0 <= b <= sqrt 3")
    for a, b, c in ((1, 0, -3), (3, 1, -2), (-1, 1, 2), (1, 2, 1)):
        ra, rb, rc = gauss_reduce_binary(a, b, c)
        assert ra * rc - rb * rb == a * c - b * b  # discriminant preserved
        assert 2 * rb <= abs(ra) <= abs(rc)
        if a * c - b * b == -3:
            assert rb == 0 and {abs(ra), abs(rc)} == {1, 3}


def test_remark_62_isomorphisms():
    pairs = [
        ("<6>+A2", "U(3)+A1"),
        ("<2>+A2", "U+<-6>"),
        ("<6>+A2(2)", "<2>+2<-6>"),
        ("<2>+A2(2)", "<6>+2A1"),
    ]
    for a, b in pairs:
        assert isomorphic_in_genus(L(a), L(b)) == "yes", (a, b)


def test_u2_u6_rewriting_rules():
    # U(2)+L = <2>+A1+L and U(6)+L = <6>+<-6>+L for L with odd discr2
    for tail in ("A1", "<-6>"):
        assert isomorphic_in_genus(L(f"U(2)+{tail}"), L(f"<2>+A1+{tail}")) == "yes"
        assert isomorphic_in_genus(L(f"U(6)+{tail}"), L(f"<6>+<-6>+{tail}")) == "yes"


def test_no_when_genus_differs():
    assert isomorphic_in_genus(L("U"), L("U(3)")) == "no"
    assert isomorphic_in_genus(L("<2>"), L("<-2>")) == "no"
    assert isomorphic_in_genus(L("U(2)"), L("D4")) == "no"  # Brown 0 vs 4


def test_symmetric_and_reflexive():
    exprs = ["U", "U(3)+A1", "<6>+A2", "U+3A2", "<2>+<-6>"]
    for a in exprs:
        assert isomorphic_in_genus(L(a), L(a)) == "yes"
        for b in exprs:
            ab = isomorphic_in_genus(L(a), L(b))
            ba = isomorphic_in_genus(L(b), L(a))
            if "yes" in (ab, ba):
                assert ab == ba


def test_invariants_quintuple():
    assert invariants(L("U")) == (2, 0, 0, 0, 0)
    assert invariants(L("U(3)+2A2+A1")) == (7, 1, 1, 1, 3)
    assert invariants(L("<6>+D4")) == (5, 3, 1, 1, 0)
    assert invariants(L("U(6)+A2(2)")) == (4, 4, 0, 0, 3)
    assert invariants(L("U(2)+A2(2)")) == (4, 4, 0, 1, 0)
    assert invariants(L("U(3)+A2(2)")) == (4, 2, 0, 0, 3)


def test_certificates_exist_for_table6_hard_cases():
    hard = [
        "<2>", "<6>", "U(2)", "U(6)", "<2>+A1", "<2>+<-6>", "<6>+A1", "<6>+<-6>",
        "U(3)", "U(3)+A2", "U(3)+A1", "U(3)+<-6>", "U(3)+A2+<-6>", "U(3)+A2(2)",
        "U(6)+A2", "U(3)+A1+<-6>", "U(3)+2<-6>", "<2>+2<-6>", "<6>+A1+<-6>",
        "<6>+2<-6>", "U(3)+A1+2<-6>", "U(6)+A2(2)", "<2>+3<-6>", "<6>+A1+2<-6>",
        "<6>+3<-6>", "U(6)+A1+2<-6>",
    ]
    for expr in hard:
        assert stability_certificate(L(expr)) is not None, expr


def test_genus_tag_detects_scale():
    assert genus_tag(L("A2")) != genus_tag(L("A2(2)"))
    assert genus_tag(L("U+A2")) == genus_tag(L("U+A2"))


def test_presentations_of_t():
    # the orthogonal complement of the cusp resolution: three presentations
    t = L("U+U(3)+2A2+A1")
    assert isomorphic_in_genus(t, L("<6>+U+3A2")) == "yes"
    assert isomorphic_in_genus(t, L("A2(-1)+3A2+A1")) == "yes"
    assert isomorphic_in_genus(L("2U+U(3)+2A2"), t) == "no"  # that one is T'
